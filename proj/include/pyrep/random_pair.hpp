// Copyright 2026 The pyrep Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PYREP_RANDOM_PAIR_HPP_
#define PYREP_RANDOM_PAIR_HPP_

#include <cstdint>
#include <random>

#include "pyrep/pythagorean.hpp"

namespace pyrep {

// Portable draws from mt19937_64 (the std distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t operator()() { return gen_(); }
  double uniform();  // [0,1)
  std::uint64_t below(std::uint64_t n) { return gen_() % n; }
  double gaussian();
  Complex complex_gaussian();

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0;
};

Matrix gaussian_matrix(int rows, int cols, Rng& rng);
Matrix haar_unitary(int d, Rng& rng);
Vector random_unit_vector(int d, Rng& rng);

// A = cos(theta) U, B = sin(theta) V.
PythagoreanPair random_rotation_pair(int d, double theta, std::uint64_t seed);
// An orthonormalized Gaussian 2d x d matrix split into top and bottom halves.
PythagoreanPair random_isometry_pair(int d, std::uint64_t seed);
// Periodic blocks on random prime words plus a random isometric remainder,
// conjugated by a Haar unitary. Always has nonzero atomic support.
PythagoreanPair random_atomic_pair(int d, std::uint64_t seed);

}  // namespace pyrep

#endif  // PYREP_RANDOM_PAIR_HPP_
