// Copyright 2026 The pyrep Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PYREP_FOCK_HPP_
#define PYREP_FOCK_HPP_

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "pyrep/forest.hpp"
#include "pyrep/pythagorean.hpp"
#include "pyrep/ray.hpp"
#include "pyrep/thompson.hpp"

namespace pyrep {

inline constexpr std::size_t kMaxFockLeaves = std::size_t{1} << 12;

class TreeTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A representative [t, (xi_1, ..., xi_n)] of a vector in the inductive limit.
class FockVector {
 public:
  FockVector(Tree tree, std::vector<Vector> leaves);
  // [e, xi]
  explicit FockVector(const Vector& xi);

  const Tree& tree() const { return tree_; }
  const std::vector<Vector>& leaves() const { return leaves_; }
  int pair_dim() const { return static_cast<int>(leaves_.front().size()); }

 private:
  Tree tree_;
  std::vector<Vector> leaves_;
};

FockVector phi_forest(const PythagoreanPair& pair, const Forest& f, const FockVector& x);
// Representative of x on a tree refining x.tree().
FockVector refine_to(const PythagoreanPair& pair, const FockVector& x, const Tree& target);

Complex inner_product(const PythagoreanPair& pair, const FockVector& x, const FockVector& y);
double fock_norm(const PythagoreanPair& pair, const FockVector& x);
// |x - y|, computed leafwise on the common refinement.
double fock_distance(const PythagoreanPair& pair, const FockVector& x, const FockVector& y);
FockVector fock_combination(const PythagoreanPair& pair, Complex a, const FockVector& x, Complex b,
                            const FockVector& y);

FockVector sigma_act(const PythagoreanPair& pair, const GroupElement& g, const FockVector& x);

FockVector tau(const PythagoreanPair& pair, std::string_view v, const FockVector& x);
FockVector tau_star(std::string_view v, const FockVector& x);
FockVector rho(const PythagoreanPair& pair, std::string_view v, const FockVector& x);
FockVector rho_ray_approx(const PythagoreanPair& pair, const Ray& p, std::size_t n,
                          const FockVector& x);

Complex matrix_coefficient(const PythagoreanPair& pair, const GroupElement& g, const FockVector& x);

}  // namespace pyrep

#endif  // PYREP_FOCK_HPP_
