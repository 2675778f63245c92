// Copyright 2026 The pyrep Authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "pyrep/pythagorean.hpp"
#include "pyrep/random_pair.hpp"
#include "support.hpp"

using namespace pyrep;
using testing::basis_vector;
using testing::load_pair;

namespace {

std::vector<std::string> words(int n) {
  std::vector<std::string> out{""};
  for (int k = 0; k < n; ++k) {
    std::vector<std::string> next;
    for (const auto& w : out) next.push_back(w + "a"), next.push_back(w + "b");
    out = std::move(next);
  }
  return out;
}

bool same_space(const Subspace& s, const Subspace& t, double tol = 1e-8) {
  return s.dim() == t.dim() && s.contains(t, tol) && t.contains(s, tol);
}

bool invariant(const PythagoreanPair& pair, const Subspace& s) {
  for (int j = 0; j < s.dim(); ++j) {
    const Vector v = s.basis().col(j);
    if (!s.contains(Vector(pair.A() * v)) || !s.contains(Vector(pair.B() * v))) return false;
  }
  return true;
}

// The random suite: rotation, isometry and atomic generators mixed.
std::vector<PythagoreanPair> random_suite(int count, int max_dim) {
  std::vector<PythagoreanPair> out;
  for (int i = 0; i < count; ++i) {
    const int d = 1 + i % max_dim;
    const std::uint64_t seed = 1000 + static_cast<std::uint64_t>(i);
    switch (i % 3) {
      case 0: out.push_back(random_rotation_pair(d, 0.2 + 0.1 * (i % 11), seed)); break;
      case 1: out.push_back(random_isometry_pair(d, seed)); break;
      default: out.push_back(random_atomic_pair(d, seed)); break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("pair validation") {
  CHECK(load_pair("pair_ex1.json").dim() == 4);
  CHECK(load_pair("pair_left.json").dim() == 1);
  try {
    load_pair("pair_double_identity.json");
    FAIL("expected an identity violation");
  } catch (const IdentityViolation& e) {
    CHECK(e.defect() == doctest::Approx(1.0).epsilon(1e-15));
  }
  try {
    load_pair("pair_ex1_printed.json");
    FAIL("expected an identity violation");
  } catch (const IdentityViolation& e) {
    CHECK(e.defect() == doctest::Approx(std::numbers::sqrt2 / 2).epsilon(1e-15));
  }
  CHECK_THROWS_AS(validate_pair(Matrix::Identity(2, 2), Matrix::Zero(3, 3)), DimensionMismatch);
  CHECK_THROWS_AS(validate_pair(Matrix::Zero(2, 3), Matrix::Zero(2, 3)), DimensionMismatch);
  CHECK_NOTHROW(validate_pair(Matrix::Identity(2, 2) * 1.00000000001, Matrix::Zero(2, 2)));
  CHECK_THROWS_AS(validate_pair(Matrix::Identity(2, 2) * 1.000001, Matrix::Zero(2, 2)),
                  IdentityViolation);
}

TEST_CASE("word action applies the first letter first") {
  const auto pair = load_pair("pair_ex1.json");
  CHECK(word_action(pair, "").isApprox(Matrix::Identity(4, 4)));
  CHECK(word_action(pair, "ab").isApprox(pair.B() * pair.A()));
  CHECK(word_action(pair, "aab").isApprox(pair.B() * pair.A() * pair.A()));
  // a then b returns e3 to itself.
  CHECK((word_action(pair, "ab") * basis_vector(4, 2) - basis_vector(4, 2)).norm() < 1e-15);
  CHECK((word_action(pair, "a") * basis_vector(4, 0) - basis_vector(4, 0)).norm() < 1e-15);
  CHECK_THROWS(word_action(pair, "ac"));
}

TEST_CASE("word partition of norm") {
  for (const auto& pair : random_suite(12, 5)) {
    Rng rng(7);
    const Vector xi = random_unit_vector(pair.dim(), rng);
    for (int n = 0; n <= 12; n += 3) {
      double sum = 0;
      for (const auto& w : words(n)) sum += (word_action(pair, w) * xi).squaredNorm();
      CHECK(std::abs(sum - 1.0) < 1e-9);
    }
  }
}

TEST_CASE("contained spaces of the example pair") {
  const auto pair = load_pair("pair_ex1.json");
  CHECK(same_space(contained_space(pair, "a"), Subspace::span(basis_vector(4, 0))));
  CHECK(same_space(contained_space(pair, "ab"), Subspace::span(basis_vector(4, 2))));
  CHECK(same_space(contained_space(pair, "ba"), Subspace::span(basis_vector(4, 1))));
  CHECK(contained_space(pair, "b").is_zero());
  CHECK(contained_space(pair, "aab").is_zero());
  CHECK_THROWS_AS(contained_space(pair, "abab"), InvalidRay);

  const auto sup = periodic_support(pair);
  REQUIRE(sup.size() == 3);
  CHECK(sup[0].period == "a");
  CHECK(sup[1].period == "ab");
  CHECK(sup[2].period == "ba");
}

TEST_CASE("contained spaces agree with the high-power oracle") {
  // X^{c^inf} = {x : |C^N x| = |x|} once N >= d, and every intermediate prefix keeps the norm.
  for (const auto& pair : random_suite(30, 5)) {
    const int d = pair.dim();
    for (const auto& c : candidate_periods(pair, d)) {
      Matrix P = Matrix::Identity(d, d);
      Subspace oracle = Subspace::full(d);
      for (int k = 0; k < d + 1; ++k)
        for (char ch : c) {
          P = pair.letter(ch) * P;
          oracle = intersection(oracle, norm_preserved(P));
        }
      CHECK(same_space(contained_space(pair, c), oracle, 1e-7));
    }
  }
}

TEST_CASE("candidate periods are complete up to length d") {
  // Oracle: every primitive word of length <= d with a nonzero contained space is listed.
  for (const auto& pair : random_suite(24, 4)) {
    const int d = pair.dim();
    const auto cand = candidate_periods(pair, d);
    for (const auto& cls : prime_period_classes(static_cast<std::size_t>(d))) {
      const std::string& w = cls.canonical_period;
      if (contained_space(pair, w).is_zero()) continue;
      const bool listed =
          std::any_of(cand.begin(), cand.end(), [&](const std::string& c) { return least_rotation(c) == w; });
      CHECK(listed);
    }
  }
}

TEST_CASE("contained spaces along distinct rays are orthogonal") {
  for (const auto& pair : random_suite(45, 6)) {
    const auto sup = periodic_support(pair);
    for (std::size_t i = 0; i < sup.size(); ++i)
      for (std::size_t j = i + 1; j < sup.size(); ++j)
        CHECK((sup[i].space.basis().adjoint() * sup[j].space.basis()).norm() < 1e-8);
  }
}

TEST_CASE("period operators") {
  const auto pair = load_pair("pair_ex1.json");
  auto single = [](const EigenData& e) {
    return e.pairs.size() == 1 && e.pairs[0].multiplicity == 1 ? e.pairs[0].value : Complex(99);
  };
  CHECK(std::abs(single(period_operator(pair, "a", contained_space(pair, "a"))) - 1.0) < 1e-12);
  CHECK(std::abs(single(period_operator(pair, "ab", contained_space(pair, "ab"))) - 1.0) < 1e-12);
  const auto phase_i = load_pair("pair_ex1_phase_i.json");
  CHECK(std::abs(single(period_operator(phase_i, "ab", contained_space(phase_i, "ab"))) -
                 Complex(0, 1)) < 1e-12);
  CHECK_THROWS(period_operator(pair, "b", Subspace(4)));

  // E is unitary on every contained space; multiplicities fill the space.
  for (const auto& pr : random_suite(45, 6))
    for (const auto& cs : periodic_support(pr)) {
      const Matrix& Q = cs.space.basis();
      const Matrix E = Q.adjoint() * word_action(pr, cs.period) * Q;
      CHECK((E.adjoint() * E - Matrix::Identity(E.rows(), E.cols())).norm() < 1e-9);
      const EigenData ed = period_operator(pr, cs.period, cs.space);
      int total = 0;
      for (const auto& p : ed.pairs) {
        total += p.multiplicity;
        CHECK(std::abs(std::abs(p.value) - 1.0) < 1e-8);
        CHECK(cs.space.contains(Subspace::span(p.basis)));
      }
      CHECK(total == cs.space.dim());
    }
}

TEST_CASE("greedy containment") {
  const auto pair = load_pair("pair_ex1.json");
  const auto r2 = greedy_containment(pair, basis_vector(4, 1));
  REQUIRE(r2.has_value());
  CHECK(*r2 == Ray("", "ba"));
  CHECK(digits(*r2, 3) == "101");
  CHECK_FALSE(greedy_containment(pair, basis_vector(4, 3)).has_value());
  const auto r1 = greedy_containment(pair, basis_vector(4, 0));
  REQUIRE(r1.has_value());
  CHECK(*r1 == Ray::left());
  CHECK_THROWS(greedy_containment(pair, Vector::Zero(4)));
  const auto one = load_pair("pair_left.json");
  CHECK(greedy_containment(one, basis_vector(1, 0)) == Ray::left());
  CHECK_FALSE(greedy_containment(random_rotation_pair(3, std::numbers::pi / 5, 1),
                                 basis_vector(3, 0)).has_value());
}

TEST_CASE("quasi-contained space of the example pair") {
  const auto pair = load_pair("pair_ex1.json");
  const QuasiContained q0 = quasi_contained(pair, 0);
  CHECK(q0.space.dim() == 3);
  CHECK_FALSE(q0.stabilised);
  const QuasiContained q1 = quasi_contained(pair, 1);
  CHECK(q1.space.dim() == 4);
  CHECK(q1.stabilised);
  CHECK(quasi_contained_space(pair, 4).dim() == 4);
  CHECK(residual_space(pair, 1).is_zero());
  CHECK(diffuse_space(pair).is_zero());
  CHECK(quasi_contained_space(load_pair("pair_left.json"), 0).dim() == 1);
  CHECK(diffuse_space(load_pair("pair_left.json")).is_zero());
  CHECK(residual_space(load_pair("pair_left.json"), 0).is_zero());
  CHECK_THROWS(quasi_contained(pair, -1));
}

TEST_CASE("a pair with a nonzero residual space") {
  const auto pair = load_pair("pair_residual.json");
  CHECK(same_space(diffuse_space(pair), Subspace::span(basis_vector(3, 2))));
  CHECK(same_space(quasi_contained_space(pair, 3), Subspace::span(basis_vector(3, 0))));
  CHECK(same_space(residual_space(pair, 3), Subspace::span(basis_vector(3, 1))));
}

TEST_CASE("strict contractions are diffuse") {
  for (int d = 1; d <= 5; ++d) {
    const auto pair = random_rotation_pair(d, std::numbers::pi / 5, static_cast<std::uint64_t>(d));
    CHECK(diffuse_space(pair).dim() == d);
    CHECK(quasi_contained_space(pair, d).is_zero());
    CHECK(residual_space(pair, d).is_zero());
    CHECK(candidate_periods(pair, d).empty());
  }
  const PythagoreanPair scalar(Matrix::Constant(1, 1, std::sqrt(0.5)), Matrix::Constant(1, 1, std::sqrt(0.5)));
  CHECK(diffuse_space(scalar).dim() == 1);
}

TEST_CASE("quasi-contained levels agree with exhaustive word enumeration") {
  // Oracle: V_N = intersection over all 2^N words w of {x : w x in V_0}.
  for (const auto& pair : random_suite(30, 4)) {
    const int d = pair.dim();
    const auto sup = periodic_support(pair);
    const Subspace V0 = atomic_base(pair, sup);
    Subspace prev = V0;
    for (int N = 0; N <= d; ++N) {
      Subspace oracle = Subspace::full(d);
      for (const auto& w : words(N))
        oracle = preimage_within(word_action(pair, w), oracle, V0);
      // The level sets grow to the union.
      oracle = subspace_sum(oracle, prev);
      prev = oracle;
      CHECK(same_space(quasi_contained(pair, N, sup).space, oracle, 1e-7));
    }
  }
}

TEST_CASE("decomposition invariants on the random suite") {
  for (const auto& pair : random_suite(60, 6)) {
    const int d = pair.dim();
    const Subspace U = diffuse_space(pair);
    const Subspace V = quasi_contained_space(pair, d);
    const Subspace Z = residual_space(pair, d);
    CHECK(U.dim() + V.dim() + Z.dim() == d);
    CHECK((U.basis().adjoint() * V.basis()).norm() < 1e-8);
    CHECK((U.basis().adjoint() * Z.basis()).norm() < 1e-8);
    CHECK((V.basis().adjoint() * Z.basis()).norm() < 1e-8);
    CHECK(invariant(pair, U));
    CHECK(invariant(pair, V));
    // Dichotomy: all diffuse, or some contained space is nonzero.
    const bool full = U.dim() == d;
    const bool some = !periodic_support(pair).empty();
    CHECK(full != some);
  }
}

TEST_CASE("random generators") {
  for (int d = 1; d <= 8; ++d) {
    const auto rot = random_rotation_pair(d, 0.7, 5);
    CHECK(rot.defect() < 1e-12);
    CHECK((rot.A().adjoint() * rot.A() - std::pow(std::cos(0.7), 2) * Matrix::Identity(d, d)).norm() < 1e-12);
    CHECK(random_isometry_pair(d, 5).defect() < 1e-12);
    const auto atomic = random_atomic_pair(d, 5);
    CHECK(atomic.defect() < 1e-12);
    CHECK_FALSE(periodic_support(atomic).empty());
  }
  Rng a(9), b(9);
  CHECK(a.uniform() == b.uniform());
  CHECK(random_atomic_pair(4, 2).A() == random_atomic_pair(4, 2).A());
  Rng r(1);
  const Matrix U = haar_unitary(5, r);
  CHECK((U.adjoint() * U - Matrix::Identity(5, 5)).norm() < 1e-12);
}
