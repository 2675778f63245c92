// Copyright 2026 The pyrep Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PYREP_PYTHAGOREAN_HPP_
#define PYREP_PYTHAGOREAN_HPP_

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "pyrep/ray.hpp"

namespace pyrep {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kIdentityTol = 1e-10;
inline constexpr double kNormTol = 1e-9;
inline constexpr double kRankTol = 1e-10;
inline constexpr double kEigenTol = 1e-8;

class IdentityViolation : public std::domain_error {
 public:
  explicit IdentityViolation(double defect);
  double defect() const { return defect_; }

 private:
  double defect_;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotUnitary : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// max |(A*A + B*B - I)_ij|
double pythagorean_defect(const Matrix& A, const Matrix& B);

class PythagoreanPair {
 public:
  PythagoreanPair(Matrix A, Matrix B, double tol = kIdentityTol);

  int dim() const { return static_cast<int>(A_.rows()); }
  const Matrix& A() const { return A_; }
  const Matrix& B() const { return B_; }
  const Matrix& letter(char c) const { return c == 'a' ? A_ : B_; }
  double tol() const { return tol_; }
  double defect() const { return pythagorean_defect(A_, B_); }

 private:
  Matrix A_;
  Matrix B_;
  double tol_;
};

PythagoreanPair validate_pair(const Matrix& A, const Matrix& B, double tol = kIdentityTol);

// Column span with orthonormal basis.
class Subspace {
 public:
  explicit Subspace(int ambient_dim = 0);
  static Subspace full(int d);
  static Subspace span(const Matrix& columns, double cutoff = kRankTol);

  int ambient_dim() const { return d_; }
  int dim() const { return static_cast<int>(Q_.cols()); }
  bool is_zero() const { return Q_.cols() == 0; }
  const Matrix& basis() const { return Q_; }

  Matrix projector() const;
  Vector project(const Vector& v) const;
  bool contains(const Vector& v, double tol = kNormTol) const;
  bool contains(const Subspace& s, double tol = kNormTol) const;

 private:
  Subspace(int d, Matrix Q) : d_(d), Q_(std::move(Q)) {}
  int d_;
  Matrix Q_;
};

Subspace orthogonal_complement(const Subspace& s);
Subspace subspace_sum(const Subspace& s, const Subspace& t, double cutoff = kRankTol);
Subspace intersection(const Subspace& s, const Subspace& t, double cutoff = kRankTol);
// {x in s : M x in t}
Subspace preimage_within(const Matrix& M, const Subspace& s, const Subspace& t,
                         double cutoff = kRankTol);
// {x : |Mx| = |x|} for a contraction M.
Subspace norm_preserved(const Matrix& M, double tol = kNormTol);

Matrix word_action(const PythagoreanPair& pair, std::string_view w);

Subspace contained_space(const PythagoreanPair& pair, std::string_view c);

struct Eigenspace {
  Complex value;
  int multiplicity;
  Matrix basis;  // ambient coordinates, orthonormal columns
};

struct EigenData {
  std::vector<Eigenspace> pairs;
};

EigenData period_operator(const PythagoreanPair& pair, std::string_view c, const Subspace& X);

struct ContainedSpace {
  std::string period;  // any rotation of a prime word
  Subspace space;
};

// Prime words w, |w| <= max_len, for which some vector keeps its norm under w.
// At most d words of each length survive.
std::vector<std::string> candidate_periods(const PythagoreanPair& pair, int max_len);

// Nonzero contained spaces of all rotations of the given prime words.
std::vector<ContainedSpace> periodic_support(const PythagoreanPair& pair,
                                             const std::vector<std::string>& periods);
std::vector<ContainedSpace> periodic_support(const PythagoreanPair& pair);

std::optional<Ray> greedy_containment(const PythagoreanPair& pair, const Vector& xi);

struct QuasiContained {
  Subspace space;
  int level;        // levels actually computed
  bool stabilised;  // V_level == V_{level-1}, or the space is already full
};

// Sum of the given contained spaces.
Subspace atomic_base(const PythagoreanPair& pair, const std::vector<ContainedSpace>& support);

QuasiContained quasi_contained(const PythagoreanPair& pair, int max_level);
QuasiContained quasi_contained(const PythagoreanPair& pair, int max_level,
                               const std::vector<ContainedSpace>& support);
Subspace quasi_contained_space(const PythagoreanPair& pair, int max_level);
Subspace diffuse_space(const PythagoreanPair& pair);
Subspace diffuse_space(const PythagoreanPair& pair, const std::vector<ContainedSpace>& support);
Subspace residual_space(const PythagoreanPair& pair, int max_level);

}  // namespace pyrep

#endif  // PYREP_PYTHAGOREAN_HPP_
