// Copyright 2026 The pyrep Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pyrep/random_pair.hpp"

#include <cmath>
#include <numbers>

namespace pyrep {

double Rng::uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u = 0;
  while (u == 0) u = uniform();
  const double v = uniform();
  const double r = std::sqrt(-2.0 * std::log(u));
  spare_ = r * std::sin(2 * std::numbers::pi * v);
  has_spare_ = true;
  return r * std::cos(2 * std::numbers::pi * v);
}

Complex Rng::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return {re * std::numbers::sqrt2 / 2, im * std::numbers::sqrt2 / 2};
}

Matrix gaussian_matrix(int rows, int cols, Rng& rng) {
  Matrix G(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) G(i, j) = rng.complex_gaussian();
  return G;
}

namespace {

// Orthonormal columns from Q of a QR factorization, with phases fixed by R.
Matrix orthonormalize(const Matrix& G) {
  Eigen::HouseholderQR<Matrix> qr(G);
  Matrix Q = qr.householderQ() * Matrix::Identity(G.rows(), G.cols());
  const Matrix& R = qr.matrixQR();
  for (Eigen::Index j = 0; j < G.cols(); ++j) {
    const Complex r = R(j, j);
    if (std::abs(r) > 0) Q.col(j) *= r / std::abs(r);
  }
  return Q;
}

}  // namespace

Matrix haar_unitary(int d, Rng& rng) { return orthonormalize(gaussian_matrix(d, d, rng)); }

Vector random_unit_vector(int d, Rng& rng) {
  Vector v = gaussian_matrix(d, 1, rng).col(0);
  return v / v.norm();
}

PythagoreanPair random_rotation_pair(int d, double theta, std::uint64_t seed) {
  Rng rng(seed);
  Matrix U = haar_unitary(d, rng);
  Matrix V = haar_unitary(d, rng);
  return PythagoreanPair(std::cos(theta) * U, std::sin(theta) * V);
}

PythagoreanPair random_isometry_pair(int d, std::uint64_t seed) {
  Rng rng(seed);
  const Matrix M = orthonormalize(gaussian_matrix(2 * d, d, rng));
  return PythagoreanPair(M.topRows(d), M.bottomRows(d));
}

PythagoreanPair random_atomic_pair(int d, std::uint64_t seed) {
  Rng rng(seed);
  Matrix M = Matrix::Zero(2 * d, d);
  int used = 0;
  do {
    const int room = d - used;
    const int len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(room, 4))));
    std::string c;
    do {
      c.clear();
      for (int i = 0; i < len; ++i) c += rng.below(2) ? 'b' : 'a';
    } while (!is_prime_word(c));
    for (int i = 0; i < len; ++i) {
      const double t = 2 * std::numbers::pi * rng.uniform();
      const int row = (c[static_cast<std::size_t>(i)] == 'a' ? 0 : d) + used + (i + 1) % len;
      M(row, used + i) = std::polar(1.0, t);
    }
    used += len;
  } while (used < d && rng.below(2));
  if (used < d) {
    const Matrix P = M.leftCols(used);
    Matrix G = gaussian_matrix(2 * d, d - used, rng);
    G -= P * (P.adjoint() * G);
    M.rightCols(d - used) = orthonormalize(G);
  }
  const Matrix W = haar_unitary(d, rng);
  const Matrix A = W * M.topRows(d) * W.adjoint();
  const Matrix B = W * M.bottomRows(d) * W.adjoint();
  return PythagoreanPair(A, B);
}

}  // namespace pyrep
