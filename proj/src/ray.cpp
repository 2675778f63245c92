// Copyright 2026 The pyrep Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pyrep/ray.hpp"

#include <algorithm>
#include <numeric>

namespace pyrep {

bool is_letter_word(std::string_view w) {
  return std::all_of(w.begin(), w.end(), [](char c) { return c == 'a' || c == 'b'; });
}

std::string prime_root(std::string_view w) {
  const std::size_t n = w.size();
  for (std::size_t k = 1; k < n; ++k) {
    if (n % k) continue;
    bool ok = true;
    for (std::size_t i = k; i < n && ok; ++i) ok = w[i] == w[i - k];
    if (ok) return std::string(w.substr(0, k));
  }
  return std::string(w);
}

bool is_prime_word(std::string_view w) { return !w.empty() && prime_root(w).size() == w.size(); }

std::string rotate(std::string_view w, std::size_t k) {
  if (w.empty()) return {};
  k %= w.size();
  return std::string(w.substr(k)) + std::string(w.substr(0, k));
}

std::string least_rotation(std::string_view w) {
  std::string best(w);
  for (std::size_t k = 1; k < w.size(); ++k) best = std::min(best, rotate(w, k));
  return best;
}

Ray::Ray(std::string_view prefix, std::string_view period) {
  if (period.empty()) throw InvalidRay("ray period is empty");
  if (!is_letter_word(prefix) || !is_letter_word(period))
    throw InvalidRay("ray words must be over {a,b}");
  prefix_ = prefix;
  period_ = prime_root(period);
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    prefix_.pop_back();
    period_ = rotate(period_, period_.size() - 1);
  }
}

Ray normalize(std::string_view prefix, std::string_view period) { return Ray(prefix, period); }

char Ray::letter(std::size_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  return period_[(i - prefix_.size()) % period_.size()];
}

RayClass ray_class(const Ray& p) { return {least_rotation(p.period())}; }
std::string canonical_period(const Ray& p) { return least_rotation(p.period()); }

std::string subword(const Ray& p, std::size_t n) {
  std::string out(n, 'a');
  for (std::size_t i = 0; i < n; ++i) out[i] = p.letter(i);
  return out;
}

Ray shift(const Ray& p, std::size_t k) {
  if (k <= p.prefix().size()) return Ray(p.prefix().substr(k), p.period());
  return Ray("", rotate(p.period(), (k - p.prefix().size()) % p.period().size()));
}

Ray prepend(std::string_view w, const Ray& p) { return Ray(std::string(w) + p.prefix(), p.period()); }

bool equivalent(const Ray& p, const Ray& q) { return ray_class(p) == ray_class(q); }

Rational to_unit_interval(const Ray& p) {
  const std::size_t m = p.prefix().size(), L = p.period().size();
  if (m + L > 62) throw std::overflow_error("ray too long for an exact 64-bit rational");
  std::int64_t pre = 0, per = 0;
  for (char c : p.prefix()) pre = 2 * pre + (c == 'b');
  for (char c : p.period()) per = 2 * per + (c == 'b');
  // value = (pre * (2^L - 1) + per) / (2^m * (2^L - 1))
  const std::int64_t cyc = (std::int64_t{1} << L) - 1;
  std::int64_t num = pre * cyc + per;
  std::int64_t den = (std::int64_t{1} << m) * cyc;
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::vector<RayClass> prime_period_classes(std::size_t max_len) {
  std::vector<RayClass> out;
  if (max_len == 0) return out;
  // Duval's generation of Lyndon words in lexicographic order.
  std::string w = "a";
  while (!w.empty()) {
    out.push_back({w});
    const std::string base = w;
    w.clear();
    while (w.size() < max_len) w += base[w.size() % base.size()];
    while (!w.empty() && w.back() == 'b') w.pop_back();
    if (!w.empty()) w.back() = 'b';
  }
  std::sort(out.begin(), out.end(), [](const RayClass& x, const RayClass& y) {
    const auto& a = x.canonical_period;
    const auto& b = y.canonical_period;
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::string digits_of(std::string_view letters) {
  std::string out(letters);
  for (auto& c : out) c = c == 'a' ? '0' : '1';
  return out;
}

std::string letters_of(std::string_view digits) {
  std::string out(digits);
  for (auto& c : out) c = c == '0' ? 'a' : 'b';
  return out;
}

Vertex digits(const Ray& p, std::size_t n) { return digits_of(subword(p, n)); }

std::string flip_last(std::string_view w) {
  std::string out(w);
  if (out.empty()) return out;
  char& c = out.back();
  if (c == 'a' || c == 'b') c = c == 'a' ? 'b' : 'a';
  else c = c == '0' ? '1' : '0';
  return out;
}

std::string to_string(const Ray& p) {
  return p.prefix() + "(" + p.period() + ")^inf";
}

}  // namespace pyrep
