// Copyright 2026 The pyrep Authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "pyrep/format.hpp"
#include "pyrep/thompson.hpp"

using namespace pyrep;

namespace {

// Exact rationals for the interval-map oracle.
struct Q {
  std::int64_t n, d;
  Q(std::int64_t a = 0, std::int64_t b = 1) : n(a), d(b) {
    if (d < 0) n = -n, d = -d;
    const std::int64_t g = std::gcd(n, d);
    if (g > 1) n /= g, d /= g;
  }
  friend Q operator+(Q a, Q b) { return Q(a.n * b.d + b.n * a.d, a.d * b.d); }
  friend Q operator-(Q a, Q b) { return Q(a.n * b.d - b.n * a.d, a.d * b.d); }
  friend Q operator*(Q a, Q b) { return Q(a.n * b.n, a.d * b.d); }
  friend bool operator<=(Q a, Q b) { return a.n * b.d <= b.n * a.d; }
  friend bool operator==(Q a, Q b) { return a.n == b.n && a.d == b.d; }
};

Q left_end(const Vertex& v) {
  Q x(0);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == '1') x = x + Q(1, std::int64_t{1} << (i + 1));
  return x;
}

Q pow2(int k) { return k >= 0 ? Q(std::int64_t{1} << k) : Q(1, std::int64_t{1} << -k); }

// g as the piecewise linear map sending the i-th domain interval onto the i-th range interval.
Q eval(const GroupElement& g, Q x) {
  const auto& t = g.range().leaves();
  const auto& s = g.domain().leaves();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Q lo = left_end(s[i]);
    const Q hi = lo + pow2(-static_cast<int>(s[i].size()));
    if (lo <= x && x <= hi)
      return left_end(t[i]) + (x - lo) * pow2(static_cast<int>(s[i].size() - t[i].size()));
  }
  FAIL("point outside [0,1]");
  return Q();
}

Q as_q(const Ray& p) {
  const Rational r = to_unit_interval(p);
  return Q(r.num, r.den);
}

Ray random_ray(std::mt19937_64& rng) {
  auto word = [&](std::size_t lo, std::size_t hi) {
    std::string w;
    const std::size_t n = lo + rng() % (hi - lo + 1);
    for (std::size_t i = 0; i < n; ++i) w += (rng() & 1) ? 'b' : 'a';
    return w;
  };
  return Ray(word(0, 6), word(1, 4));
}

GroupElement power(const GroupElement& g, int k) {
  GroupElement out;
  const GroupElement base = k >= 0 ? g : inverse(g);
  for (int i = 0; i < std::abs(k); ++i) out = multiply(out, base);
  return out;
}

GroupElement commutator(const GroupElement& g, const GroupElement& h) {
  return multiply(multiply(inverse(g), inverse(h)), multiply(g, h));
}

}  // namespace

TEST_CASE("generators") {
  CHECK(x0().range().leaves() == std::vector<Vertex>{"0", "10", "11"});
  CHECK(x0().domain().leaves() == std::vector<Vertex>{"00", "01", "1"});
  CHECK(x1().range().leaves() == std::vector<Vertex>{"0", "10", "110", "111"});
  CHECK(x1().domain().leaves() == std::vector<Vertex>{"0", "100", "101", "11"});
  CHECK(GroupElement().is_identity());
  CHECK_THROWS_AS(TreeDiagram(Tree::caret(), Tree()), ArityMismatch);
}

TEST_CASE("reduction cancels common carets") {
  const TreeDiagram d(Tree({"00", "01", "10", "11"}), Tree({"000", "001", "01", "1"}));
  const GroupElement g(d);
  CHECK(g == x0());
  CHECK(reduce(TreeDiagram(Tree::caret(), Tree::caret())).is_identity());
  CHECK(GroupElement(expand(x1(), Tree({"00", "01", "100", "101", "11"}))) == x1());
}

TEST_CASE("frozen values") {
  // x0(1/3) = 7/12
  CHECK(apply_to_ray(x0(), Ray("", "ab")) == Ray("ba", "ab"));
  CHECK(apply_to_word(x0(), "01") == "10");
  CHECK(apply_to_word(x0(), "0110") == "1010");
  CHECK(apply_to_word(x1(), "1011") == "1101");
  CHECK_THROWS_AS(apply_to_word(x0(), "0"), WordTooShort);
  CHECK(log2_derivative_at(x0(), Ray::left()) == 1);
  CHECK(log2_derivative_at(x0(), Ray::right()) == -1);
  CHECK(log2_derivative_at(x0(), Ray("", "ab")) == 0);
  CHECK(in_parabolic(x0(), Ray::left()));
  CHECK_FALSE(in_parabolic_hat(x0(), Ray::left()));
  CHECK_FALSE(in_parabolic(x0(), Ray("", "ab")));
  CHECK(in_parabolic_hat(x1(), Ray("", "ab")));
  CHECK(in_parabolic(x1(), Ray::right()));
  CHECK(element_to_json(multiply(x0(), x1())) ==
        R"({"range":["0","10","110","1110","1111"],"domain":["00","01","100","101","11"]})");
  CHECK(element_to_json(inverse(x0())) == R"({"range":["00","01","1"],"domain":["0","10","11"]})");
}

TEST_CASE("the defining relations of F hold") {
  const GroupElement a = x0(), b = x1();
  // x0 x1^-1 is the identity on [7/8, 1], which supports x0^2 x1 x0^-2 and x0^3 x1 x0^-3.
  const GroupElement x2 = multiply(multiply(a, b), inverse(a));
  const GroupElement x3 = multiply(multiply(a, x2), inverse(a));
  const GroupElement x4 = multiply(multiply(a, x3), inverse(a));
  const GroupElement ab = multiply(a, inverse(b));
  CHECK(commutator(ab, x3).is_identity());
  CHECK(commutator(ab, x4).is_identity());
  CHECK_FALSE(commutator(ab, x2).is_identity());
  CHECK_FALSE(commutator(a, b).is_identity());
  CHECK_FALSE(power(a, 5).is_identity());
}

TEST_CASE("action agrees with the interval-map oracle") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const GroupElement g = random_element(6, rng());
    const GroupElement h = random_element(6, rng());
    const Ray p = random_ray(rng);
    CHECK(as_q(apply_to_ray(g, p)) == eval(g, as_q(p)));
    // Composition applies h first.
    CHECK(eval(multiply(g, h), as_q(p)) == eval(g, eval(h, as_q(p))));
    CHECK(eval(inverse(g), eval(g, as_q(p))) == as_q(p));
    CHECK(in_parabolic(g, p) == (eval(g, as_q(p)) == as_q(p)));
  }
}

TEST_CASE("slopes agree with finite differences of the oracle") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    const GroupElement g = random_element(6, rng());
    const Ray p = random_ray(rng);
    // One-sided difference quotient over a step far below the breakpoint spacing;
    // a ray ending in b^inf approaches its point from the left.
    const int k = 32;
    const Q x = as_q(p);
    const Q step = p.period() == "b" ? Q(0) - pow2(-k) : pow2(-k);
    const Q slope = (eval(g, x + step) - eval(g, x)) * pow2(k) * (p.period() == "b" ? Q(-1) : Q(1));
    CHECK(slope == pow2(log2_derivative_at(g, p)));
  }
}

TEST_CASE("random elements are reduced and within budget") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const GroupElement g = random_element(12, seed);
    CHECK(g.range().carets() <= 12);
    CHECK(reduce(g.diagram()) == g);
    CHECK(random_element(12, seed) == g);
  }
  CHECK(random_element(0, 5).is_identity());
}

TEST_CASE("matching vertices") {
  const GroupElement g = match_vertices("10", "0110");
  CHECK(maps_vertex(g, "0110", "10"));
  CHECK(apply_to_word(g, "0110") == "10");
  CHECK(match_vertices("0", "000") == power(x0(), 2));
  CHECK_THROWS_AS(match_vertices("00", "11"), RegionMismatch);
  CHECK_THROWS_AS(match_vertices("", "0"), RegionMismatch);
  std::mt19937_64 rng(31);
  auto word = [&](std::size_t n) {
    std::string w;
    for (std::size_t i = 0; i < n; ++i) w += (rng() & 1) ? '1' : '0';
    return w;
  };
  for (int trial = 0; trial < 500; ++trial) {
    const Vertex v = word(1 + rng() % 6), w = word(1 + rng() % 6);
    if (vertex_region(v) != vertex_region(w)) {
      CHECK_THROWS_AS(match_vertices(v, w), RegionMismatch);
      continue;
    }
    const GroupElement m = match_vertices(v, w);
    CHECK(apply_to_word(m, w) == v);
    CHECK(apply_to_word(m, w + "01") == v + "01");
  }
}
