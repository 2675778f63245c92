// Copyright 2026 The pyrep Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PYREP_RAY_HPP_
#define PYREP_RAY_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pyrep/forest.hpp"

namespace pyrep {

class InvalidRay : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Letters are in application order: the first letter of a word acts first.
bool is_letter_word(std::string_view w);
std::string prime_root(std::string_view w);
bool is_prime_word(std::string_view w);
std::string rotate(std::string_view w, std::size_t k);
std::string least_rotation(std::string_view w);

// An eventually periodic ray  prefix . period . period ...
class Ray {
 public:
  Ray(std::string_view prefix, std::string_view period);

  static Ray left() { return Ray("", "a"); }
  static Ray right() { return Ray("", "b"); }

  const std::string& prefix() const { return prefix_; }
  const std::string& period() const { return period_; }
  char letter(std::size_t i) const;

  friend bool operator==(const Ray&, const Ray&) = default;
  friend auto operator<=>(const Ray&, const Ray&) = default;

 private:
  std::string prefix_;
  std::string period_;
};

Ray normalize(std::string_view prefix, std::string_view period);

struct RayClass {
  std::string canonical_period;
  friend bool operator==(const RayClass&, const RayClass&) = default;
  friend auto operator<=>(const RayClass&, const RayClass&) = default;
};

RayClass ray_class(const Ray& p);
std::string canonical_period(const Ray& p);

std::string subword(const Ray& p, std::size_t n);
Ray shift(const Ray& p, std::size_t k);
Ray prepend(std::string_view w, const Ray& p);
bool equivalent(const Ray& p, const Ray& q);

struct Rational {
  std::int64_t num;
  std::int64_t den;
  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational to_unit_interval(const Ray& p);

// One Lyndon representative per class, sorted by (length, word).
std::vector<RayClass> prime_period_classes(std::size_t max_len);

Vertex digits(const Ray& p, std::size_t n);
std::string letters_of(std::string_view digits);
std::string digits_of(std::string_view letters);
std::string flip_last(std::string_view w);

std::string to_string(const Ray& p);

}  // namespace pyrep

#endif  // PYREP_RAY_HPP_
