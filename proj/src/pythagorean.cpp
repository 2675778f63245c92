// Copyright 2026 The pyrep Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pyrep/pythagorean.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>

namespace pyrep {

namespace {

std::string violation_message(double defect) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "Pythagorean identity violated, defect %.17g", defect);
  return buf;
}

}  // namespace

IdentityViolation::IdentityViolation(double defect)
    : std::domain_error(violation_message(defect)), defect_(defect) {}

double pythagorean_defect(const Matrix& A, const Matrix& B) {
  if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
    throw DimensionMismatch("A and B must be square matrices of equal size");
  const Matrix D = A.adjoint() * A + B.adjoint() * B - Matrix::Identity(A.rows(), A.cols());
  return D.size() == 0 ? 0.0 : D.cwiseAbs().maxCoeff();
}

PythagoreanPair::PythagoreanPair(Matrix A, Matrix B, double tol)
    : A_(std::move(A)), B_(std::move(B)), tol_(tol) {
  if (A_.rows() == 0) throw DimensionMismatch("pair dimension must be at least 1");
  const double defect = pythagorean_defect(A_, B_);
  if (!(defect <= tol_)) throw IdentityViolation(defect);
}

PythagoreanPair validate_pair(const Matrix& A, const Matrix& B, double tol) {
  return PythagoreanPair(A, B, tol);
}

Subspace::Subspace(int ambient_dim) : d_(ambient_dim), Q_(ambient_dim, 0) {}

Subspace Subspace::full(int d) { return Subspace(d, Matrix::Identity(d, d)); }

Subspace Subspace::span(const Matrix& columns, double cutoff) {
  const int d = static_cast<int>(columns.rows());
  if (columns.cols() == 0 || d == 0) return Subspace(d);
  Eigen::JacobiSVD<Matrix> svd(columns, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  int k = 0;
  while (k < s.size() && s(k) > cutoff) ++k;
  return Subspace(d, svd.matrixU().leftCols(k));
}

Matrix Subspace::projector() const { return Q_ * Q_.adjoint(); }

Vector Subspace::project(const Vector& v) const { return Q_ * (Q_.adjoint() * v); }

bool Subspace::contains(const Vector& v, double tol) const {
  return (v - project(v)).norm() <= tol * std::max(1.0, v.norm());
}

bool Subspace::contains(const Subspace& s, double tol) const {
  if (s.is_zero()) return true;
  const Matrix R = s.basis() - Q_ * (Q_.adjoint() * s.basis());
  return R.cwiseAbs().maxCoeff() <= tol;
}

Subspace orthogonal_complement(const Subspace& s) {
  const int d = s.ambient_dim();
  if (s.is_zero()) return Subspace::full(d);
  Eigen::JacobiSVD<Matrix> svd(s.basis(), Eigen::ComputeFullU);
  return Subspace::span(svd.matrixU().rightCols(d - s.dim()));
}

Subspace subspace_sum(const Subspace& s, const Subspace& t, double cutoff) {
  Matrix M(s.ambient_dim(), s.dim() + t.dim());
  M << s.basis(), t.basis();
  return Subspace::span(M, cutoff);
}

namespace {

// Orthonormal basis of {y : K y = 0}.
Matrix null_space(const Matrix& K, double cutoff) {
  const Eigen::Index k = K.cols();
  if (k == 0) return Matrix(0, 0);
  if (K.rows() == 0) return Matrix::Identity(k, k);
  Eigen::JacobiSVD<Matrix> svd(K, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cutoff) ++rank;
  return svd.matrixV().rightCols(k - rank);
}

Subspace preimage_of(const std::vector<const Matrix*>& maps, const Subspace& s,
                     const Subspace& t, double cutoff) {
  const int d = s.ambient_dim();
  if (s.is_zero()) return Subspace(d);
  const Matrix J = Matrix::Identity(d, d) - t.projector();
  Matrix K(static_cast<Eigen::Index>(maps.size()) * d, s.dim());
  for (std::size_t i = 0; i < maps.size(); ++i)
    K.middleRows(static_cast<Eigen::Index>(i) * d, d) = J * (*maps[i]) * s.basis();
  const Matrix N = null_space(K, cutoff);
  if (N.cols() == 0) return Subspace(d);
  return Subspace::span(s.basis() * N, cutoff);
}

}  // namespace

Subspace preimage_within(const Matrix& M, const Subspace& s, const Subspace& t, double cutoff) {
  return preimage_of({&M}, s, t, cutoff);
}

Subspace intersection(const Subspace& s, const Subspace& t, double cutoff) {
  const Matrix I = Matrix::Identity(s.ambient_dim(), s.ambient_dim());
  return preimage_within(I, s, t, cutoff);
}

Subspace norm_preserved(const Matrix& M, double tol) {
  const int d = static_cast<int>(M.cols());
  Eigen::SelfAdjointEigenSolver<Matrix> es(M.adjoint() * M);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < d; ++i)
    if (es.eigenvalues()(i) >= 1.0 - tol) keep.push_back(i);
  Matrix Q(d, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j)
    Q.col(static_cast<Eigen::Index>(j)) = es.eigenvectors().col(keep[j]);
  return Subspace::span(Q);
}

Matrix word_action(const PythagoreanPair& pair, std::string_view w) {
  if (!is_letter_word(w)) throw std::invalid_argument("word must be over {a,b}");
  Matrix M = Matrix::Identity(pair.dim(), pair.dim());
  for (char c : w) M = pair.letter(c) * M;
  return M;
}

Subspace contained_space(const PythagoreanPair& pair, std::string_view c) {
  if (!is_letter_word(c) || !is_prime_word(c))
    throw InvalidRay("contained_space: '" + std::string(c) + "' is not a prime word");
  const Matrix C = word_action(pair, c);
  Subspace X = norm_preserved(C);
  for (int j = 0; j <= pair.dim() && !X.is_zero(); ++j) {
    Subspace next = preimage_within(C, X, X);
    if (next.dim() == X.dim()) break;
    X = std::move(next);
  }
  return X;
}

namespace {

double arg_2pi(Complex z) {
  double a = std::arg(z);
  if (a < 0) a += 2 * std::numbers::pi;
  if (a >= 2 * std::numbers::pi - 1e-12) a = 0;
  return a;
}

}  // namespace

EigenData period_operator(const PythagoreanPair& pair, std::string_view c, const Subspace& X) {
  if (X.is_zero()) throw std::invalid_argument("period_operator: zero subspace");
  const Matrix& Q = X.basis();
  const Matrix E = Q.adjoint() * word_action(pair, c) * Q;
  const Eigen::Index k = E.rows();
  const double err = (E.adjoint() * E - Matrix::Identity(k, k)).cwiseAbs().maxCoeff();
  if (err > kNormTol)
    throw NotUnitary("period operator of '" + std::string(c) + "' is not unitary, defect " +
                     std::to_string(err));
  Eigen::ComplexSchur<Matrix> schur(E);
  const Matrix& T = schur.matrixT();
  const Matrix& U = schur.matrixU();

  std::vector<Eigen::Index> order(static_cast<std::size_t>(k));
  for (Eigen::Index i = 0; i < k; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return arg_2pi(T(i, i)) < arg_2pi(T(j, j));
  });

  std::vector<std::vector<Eigen::Index>> groups;
  for (Eigen::Index i : order) {
    bool placed = false;
    for (auto& g : groups)
      if (std::abs(T(g.front(), g.front()) - T(i, i)) <= kEigenTol) {
        g.push_back(i);
        placed = true;
        break;
      }
    if (!placed) groups.push_back({i});
  }

  EigenData out;
  for (const auto& g : groups) {
    Complex mean = 0;
    Matrix V(k, static_cast<Eigen::Index>(g.size()));
    for (std::size_t j = 0; j < g.size(); ++j) {
      mean += T(g[j], g[j]);
      V.col(static_cast<Eigen::Index>(j)) = U.col(g[j]);
    }
    mean /= static_cast<double>(g.size());
    if (std::abs(std::abs(mean) - 1.0) > kEigenTol)
      throw NotUnitary("period operator eigenvalue off the unit circle");
    out.pairs.push_back({mean / std::abs(mean), static_cast<int>(g.size()), Q * V});
  }
  return out;
}

namespace {

bool shortlex_less(const std::string& a, const std::string& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

}  // namespace

std::vector<std::string> candidate_periods(const PythagoreanPair& pair, int max_len) {
  struct Node {
    std::string word;
    Matrix M;
  };
  std::vector<std::string> out;
  std::vector<Node> level{{"", Matrix::Identity(pair.dim(), pair.dim())}};
  for (int n = 1; n <= max_len && !level.empty(); ++n) {
    std::vector<Node> next;
    for (const auto& node : level)
      for (char x : {'a', 'b'}) {
        Matrix M = pair.letter(x) * node.M;
        if (norm_preserved(M).is_zero()) continue;
        std::string w = node.word + x;
        if (is_prime_word(w)) out.push_back(w);
        next.push_back({std::move(w), std::move(M)});
      }
    level = std::move(next);
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

std::vector<ContainedSpace> periodic_support(const PythagoreanPair& pair,
                                             const std::vector<std::string>& periods) {
  std::set<std::string, decltype(&shortlex_less)> classes(&shortlex_less);
  for (const auto& w : periods) {
    if (!is_letter_word(w) || !is_prime_word(w))
      throw InvalidRay("periodic_support: '" + w + "' is not a prime word");
    classes.insert(least_rotation(w));
  }
  std::vector<ContainedSpace> out;
  for (const auto& c : classes) {
    Subspace X = contained_space(pair, c);
    if (X.is_zero()) continue;
    out.push_back({c, std::move(X)});
    for (std::size_t k = 1; k < c.size(); ++k) {
      const std::string r = rotate(c, k);
      out.push_back({r, contained_space(pair, r)});
    }
  }
  return out;
}

std::vector<ContainedSpace> periodic_support(const PythagoreanPair& pair) {
  return periodic_support(pair, candidate_periods(pair, pair.dim()));
}

std::optional<Ray> greedy_containment(const PythagoreanPair& pair, const Vector& xi) {
  const double n0 = xi.norm();
  if (!(n0 > 0)) throw std::invalid_argument("greedy_containment: zero vector");
  const auto support = periodic_support(pair);
  Vector eta = xi / n0;
  std::string letters;
  for (int step = 0;; ++step) {
    for (const auto& cs : support)
      if (cs.space.contains(eta)) return Ray(letters, cs.period);
    if (step == pair.dim()) return std::nullopt;
    Vector a = pair.A() * eta, b = pair.B() * eta;
    if (std::abs(a.norm() - 1.0) <= kNormTol) {
      eta = a;
      letters += 'a';
    } else if (std::abs(b.norm() - 1.0) <= kNormTol) {
      eta = b;
      letters += 'b';
    } else {
      return std::nullopt;
    }
  }
}

Subspace atomic_base(const PythagoreanPair& pair, const std::vector<ContainedSpace>& support) {
  Subspace Y(pair.dim());
  for (const auto& cs : support) Y = subspace_sum(Y, cs.space);
  return Y;
}

namespace {

Subspace pulled_back(const PythagoreanPair& pair, const Subspace& V) {
  return preimage_of({&pair.A(), &pair.B()}, Subspace::full(pair.dim()), V, kRankTol);
}

}  // namespace

QuasiContained quasi_contained(const PythagoreanPair& pair, int max_level) {
  return quasi_contained(pair, max_level, periodic_support(pair));
}

QuasiContained quasi_contained(const PythagoreanPair& pair, int max_level,
                               const std::vector<ContainedSpace>& support) {
  if (max_level < 0) throw std::invalid_argument("max_level must be nonnegative");
  const int d = pair.dim();
  QuasiContained q{atomic_base(pair, support), 0, false};
  while (true) {
    if (q.space.dim() == d) {
      q.stabilised = true;
      break;
    }
    Subspace next = pulled_back(pair, q.space);
    if (next.dim() == q.space.dim()) {
      q.stabilised = true;
      break;
    }
    if (q.level == max_level) break;
    q.space = std::move(next);
    ++q.level;
  }
  return q;
}

Subspace quasi_contained_space(const PythagoreanPair& pair, int max_level) {
  return quasi_contained(pair, max_level).space;
}

Subspace diffuse_space(const PythagoreanPair& pair) {
  return diffuse_space(pair, periodic_support(pair));
}

Subspace diffuse_space(const PythagoreanPair& pair, const std::vector<ContainedSpace>& support) {
  const int d = pair.dim();
  Subspace S = atomic_base(pair, support);
  const Matrix As = pair.A().adjoint(), Bs = pair.B().adjoint();
  for (int j = 0; j <= d && !S.is_zero() && S.dim() < d; ++j) {
    const Matrix& Q = S.basis();
    Matrix M(d, 3 * Q.cols());
    M << Q, As * Q, Bs * Q;
    Subspace next = Subspace::span(M);
    if (next.dim() == S.dim()) break;
    S = std::move(next);
  }
  return orthogonal_complement(S);
}

Subspace residual_space(const PythagoreanPair& pair, int max_level) {
  return orthogonal_complement(
      subspace_sum(diffuse_space(pair), quasi_contained_space(pair, max_level)));
}

}  // namespace pyrep
