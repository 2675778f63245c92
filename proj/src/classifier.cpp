// Copyright 2026 The pyrep Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pyrep/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <tuple>

#include "pyrep/format.hpp"

namespace pyrep {

const char* kind_name(SummandKind k) {
  switch (k) {
    case SummandKind::one_dim_char: return "one_dim_char";
    case SummandKind::induced_char: return "induced_char";
    case SummandKind::straight_pair: return "straight_pair";
  }
  return "?";
}

namespace {

double arg_2pi(Complex z) {
  double a = std::arg(z);
  if (a < 0) a += 2 * std::numbers::pi;
  if (a >= 2 * std::numbers::pi - 1e-12) a = 0;
  return a;
}

double snap(double x) {
  for (double t : {-1.0, 0.0, 1.0})
    if (std::abs(x - t) <= 1e-12) return t;
  return x;
}

Complex snap(Complex z) { return {snap(z.real()), snap(z.imag())}; }

Complex unit_power(Complex z, int n) {
  Complex base = n < 0 ? std::conj(z) : z;
  Complex out = 1;
  for (int i = 0; i < std::abs(n); ++i) out *= base;
  return out;
}

std::string ray_text(const Ray& p) {
  return p.prefix().empty() ? "(" + p.period() + ")^inf" : p.prefix() + "(" + p.period() + ")^inf";
}

}  // namespace

double Summand::phase_arg() const { return arg_2pi(phase); }

std::string Summand::describe() const {
  const std::string m = ", mult " + std::to_string(multiplicity);
  switch (kind) {
    case SummandKind::induced_char:
      return "Ind_{F_p}^F chi_phi^p, p = (" + period + ")^inf, phi = " + format_complex(phase) +
             ", gamma = " + format_complex(eigenvalue) + m;
    case SummandKind::one_dim_char:
      return std::string("chi_gamma^") + side() + ", gamma = " + format_complex(eigenvalue) + m;
    case SummandKind::straight_pair:
      return std::string("chi_gamma^") + side() + " + Ind_{F_p}^F chi_gamma^p, p = " +
             ray_text(witness_ray(*this, Component::induced)) +
             ", gamma = " + format_complex(eigenvalue) + m;
  }
  return {};
}

DecompositionReport classify(const PythagoreanPair& pair, int max_level) {
  return classify(pair, max_level, candidate_periods(pair, pair.dim()));
}

DecompositionReport classify(const PythagoreanPair& pair, int max_level,
                             const std::vector<std::string>& periods) {
  const int d = pair.dim();
  const int level = max_level < 0 ? d : max_level;
  const auto support = periodic_support(pair, periods);

  DecompositionReport r;
  r.dim = d;
  r.level_cap_used = level;
  r.ind_mixing = support.empty();
  for (const auto& cs : support) {
    if (cs.period == "a" || cs.period == "b") r.weakly_mixing = false;
    if (cs.period != least_rotation(cs.period)) continue;
    const int L = static_cast<int>(cs.period.size());
    const bool straight = L == 1;
    for (const auto& e : period_operator(pair, cs.period, cs.space).pairs) {
      Summand s;
      s.kind = straight ? SummandKind::straight_pair : SummandKind::induced_char;
      s.period = cs.period;
      s.eigenvalue = snap(e.value);
      s.period_length = L;
      s.phase = snap(std::polar(1.0, arg_2pi(s.eigenvalue) / L));
      s.multiplicity = e.multiplicity;
      s.eigenbasis = e.basis;
      r.summands.push_back(std::move(s));
    }
  }
  std::stable_sort(r.summands.begin(), r.summands.end(), [](const Summand& x, const Summand& y) {
    return std::make_tuple(x.period_length, x.period, x.phase_arg()) <
           std::make_tuple(y.period_length, y.period, y.phase_arg());
  });

  const Subspace U = diffuse_space(pair, support);
  const QuasiContained V = quasi_contained(pair, level, support);
  r.dim_diffuse = U.dim();
  r.dim_quasi = V.space.dim();
  r.dim_residual = orthogonal_complement(subspace_sum(U, V.space)).dim();
  r.level_reached = V.level;
  r.level_capped = !V.stabilised && r.dim_residual > 0;
  return r;
}

Ray witness_ray(const Summand& s, Component c) {
  if (s.kind != SummandKind::straight_pair || c == Component::character) return Ray("", s.period);
  return s.period == "a" ? Ray("b", "a") : Ray("a", "b");
}

Complex predicted_coefficient(const Summand& s, const Ray& witness, const GroupElement& g,
                              Component c) {
  const bool character = s.kind == SummandKind::one_dim_char ||
                         (s.kind == SummandKind::straight_pair && c == Component::character);
  if (!character && !in_parabolic(g, witness)) return 0;
  return unit_power(s.phase, log2_derivative_at(g, witness));
}

FockVector cyclic_vector(const Summand& s, int index, Component c) {
  if (index < 0 || index >= s.eigenbasis.cols())
    throw std::out_of_range("cyclic_vector: eigenvector index out of range");
  FockVector x(Vector(s.eigenbasis.col(index)));
  if (s.kind == SummandKind::straight_pair && c == Component::induced)
    return tau_star(s.period == "a" ? "1" : "0", x);
  return x;
}

bool verify_summand(const PythagoreanPair& pair, const Summand& s, const FockVector& cyclic,
                    const std::vector<GroupElement>& sample, double tol, Component c) {
  const Ray w = witness_ray(s, c);
  for (const auto& g : sample)
    if (std::abs(matrix_coefficient(pair, g, cyclic) - predicted_coefficient(s, w, g, c)) > tol)
      return false;
  return true;
}

namespace {

struct Key {
  int type;  // 0 character, 1 induced half of a straight pair, 2 induced_char
  std::string tag;
  Complex gamma;
};

std::vector<Key> components(const DecompositionReport& r) {
  std::vector<Key> out;
  for (const auto& s : r.summands)
    for (int m = 0; m < s.multiplicity; ++m) {
      if (s.kind == SummandKind::induced_char) {
        out.push_back({2, s.period, s.eigenvalue});
        continue;
      }
      const bool trivial = std::abs(s.eigenvalue - 1.0) <= kEigenTol;
      out.push_back({0, trivial ? std::string() : std::string(1, s.side()), s.eigenvalue});
      if (s.kind == SummandKind::straight_pair) out.push_back({1, std::string(1, s.side()), s.eigenvalue});
    }
  return out;
}

}  // namespace

bool equivalent_atomic(const DecompositionReport& r1, const DecompositionReport& r2) {
  auto k1 = components(r1);
  auto k2 = components(r2);
  if (k1.size() != k2.size()) return false;
  std::vector<bool> used(k2.size(), false);
  for (const auto& a : k1) {
    bool found = false;
    for (std::size_t j = 0; j < k2.size() && !found; ++j) {
      if (used[j] || k2[j].type != a.type || k2[j].tag != a.tag) continue;
      if (std::abs(k2[j].gamma - a.gamma) <= kEigenTol) used[j] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace pyrep
