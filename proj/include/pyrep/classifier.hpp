// Copyright 2026 The pyrep Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PYREP_CLASSIFIER_HPP_
#define PYREP_CLASSIFIER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "pyrep/fock.hpp"
#include "pyrep/pythagorean.hpp"
#include "pyrep/ray.hpp"
#include "pyrep/thompson.hpp"

namespace pyrep {

enum class SummandKind { one_dim_char, induced_char, straight_pair };

const char* kind_name(SummandKind k);

struct Summand {
  SummandKind kind;
  std::string period;  // canonical period; "a" is side l, "b" is side r
  Complex eigenvalue;  // gamma
  int period_length;
  Complex phase;       // phi with phi^period_length = gamma, Arg in [0, 2 pi / period_length)
  int multiplicity;
  Matrix eigenbasis;   // orthonormal eigenvectors in the pair's space

  char side() const { return period == "a" ? 'l' : 'r'; }
  double phase_arg() const;
  std::string describe() const;
};

struct DecompositionReport {
  int dim = 0;
  int dim_diffuse = 0;
  int dim_quasi = 0;
  int dim_residual = 0;
  int level_cap_used = 0;
  int level_reached = 0;
  bool level_capped = false;
  std::vector<Summand> summands;
  bool weakly_mixing = true;
  bool ind_mixing = true;
};

// Negative max_level means the pair dimension.
DecompositionReport classify(const PythagoreanPair& pair, int max_level = -1);
// Same, with an explicit candidate list of prime period words (any rotation, any order).
DecompositionReport classify(const PythagoreanPair& pair, int max_level,
                             const std::vector<std::string>& periods);

// Which half of a straight_pair a cyclic vector belongs to.
enum class Component { character, induced };

Ray witness_ray(const Summand& s, Component c = Component::induced);
Complex predicted_coefficient(const Summand& s, const Ray& witness, const GroupElement& g,
                              Component c = Component::induced);
FockVector cyclic_vector(const Summand& s, int index, Component c = Component::induced);
bool verify_summand(const PythagoreanPair& pair, const Summand& s, const FockVector& cyclic,
                    const std::vector<GroupElement>& sample, double tol,
                    Component c = Component::induced);

bool equivalent_atomic(const DecompositionReport& r1, const DecompositionReport& r2);

}  // namespace pyrep

#endif  // PYREP_CLASSIFIER_HPP_
