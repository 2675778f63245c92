// Copyright 2026 The pyrep Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pyrep/fock.hpp"

#include <cmath>

namespace pyrep {

FockVector::FockVector(Tree tree, std::vector<Vector> leaves)
    : tree_(std::move(tree)), leaves_(std::move(leaves)) {
  if (leaves_.size() != tree_.size())
    throw DimensionMismatch("fock vector: " + std::to_string(leaves_.size()) +
                            " leaf vectors for a tree with " + std::to_string(tree_.size()) +
                            " leaves");
  const auto d = leaves_.front().size();
  if (d == 0) throw DimensionMismatch("fock vector: leaf vectors must be nonempty");
  for (const auto& v : leaves_)
    if (v.size() != d) throw DimensionMismatch("fock vector: leaf vectors differ in dimension");
}

FockVector::FockVector(const Vector& xi) : FockVector(Tree(), {xi}) {}

namespace {

void check_pair(const PythagoreanPair& pair, const FockVector& x) {
  if (x.pair_dim() != pair.dim())
    throw DimensionMismatch("fock vector has dimension " + std::to_string(x.pair_dim()) +
                            ", pair has dimension " + std::to_string(pair.dim()));
}

// Decorations of the leaves [lo, hi) of t below the vertex of the given depth.
void decorate(const PythagoreanPair& pair, const Tree& t, std::size_t lo, std::size_t hi,
              std::size_t depth, const Vector& xi, std::vector<Vector>& out) {
  if (hi - lo == 1 && t[lo].size() == depth) {
    out.push_back(xi);
    return;
  }
  std::size_t mid = lo;
  while (mid < hi && t[mid][depth] == '0') ++mid;
  decorate(pair, t, lo, mid, depth + 1, pair.A() * xi, out);
  decorate(pair, t, mid, hi, depth + 1, pair.B() * xi, out);
}

}  // namespace

FockVector phi_forest(const PythagoreanPair& pair, const Forest& f, const FockVector& x) {
  check_pair(pair, x);
  if (f.roots() != x.tree().size())
    throw ArityMismatch("phi_forest: forest has " + std::to_string(f.roots()) +
                        " roots, vector has " + std::to_string(x.tree().size()) + " leaves");
  if (f.leaf_count() > kMaxFockLeaves)
    throw TreeTooLarge("fock vector would exceed " + std::to_string(kMaxFockLeaves) + " leaves");
  std::vector<Vector> out;
  out.reserve(f.leaf_count());
  for (std::size_t j = 0; j < f.roots(); ++j) {
    const Tree& t = f.trees()[j];
    decorate(pair, t, 0, t.size(), 0, x.leaves()[j], out);
  }
  return FockVector(graft(x.tree(), f), std::move(out));
}

FockVector refine_to(const PythagoreanPair& pair, const FockVector& x, const Tree& target) {
  return phi_forest(pair, forest_between(x.tree(), target), x);
}

Complex inner_product(const PythagoreanPair& pair, const FockVector& x, const FockVector& y) {
  const Refinement c = common_refinement(x.tree(), y.tree());
  const FockVector X = phi_forest(pair, c.f, x);
  const FockVector Y = phi_forest(pair, c.g, y);
  Complex s = 0;
  for (std::size_t i = 0; i < X.leaves().size(); ++i) s += Y.leaves()[i].dot(X.leaves()[i]);
  return s;
}

double fock_norm(const PythagoreanPair& pair, const FockVector& x) {
  check_pair(pair, x);
  double s = 0;
  for (const auto& v : x.leaves()) s += v.squaredNorm();
  return std::sqrt(s);
}

FockVector fock_combination(const PythagoreanPair& pair, Complex a, const FockVector& x, Complex b,
                            const FockVector& y) {
  const Refinement c = common_refinement(x.tree(), y.tree());
  const FockVector X = phi_forest(pair, c.f, x);
  const FockVector Y = phi_forest(pair, c.g, y);
  std::vector<Vector> out;
  out.reserve(X.leaves().size());
  for (std::size_t i = 0; i < X.leaves().size(); ++i)
    out.push_back(a * X.leaves()[i] + b * Y.leaves()[i]);
  return FockVector(c.r, std::move(out));
}

double fock_distance(const PythagoreanPair& pair, const FockVector& x, const FockVector& y) {
  return fock_norm(pair, fock_combination(pair, 1.0, x, -1.0, y));
}

FockVector sigma_act(const PythagoreanPair& pair, const GroupElement& g, const FockVector& x) {
  const Refinement c = common_refinement(g.domain(), x.tree());
  FockVector xr = phi_forest(pair, c.g, x);
  return FockVector(graft(g.range(), c.f), xr.leaves());
}

FockVector tau(const PythagoreanPair& pair, std::string_view v, const FockVector& x) {
  const Tree r = common_refinement(x.tree(), Tree::with_leaf(v)).r;
  const FockVector xr = refine_to(pair, x, r);
  std::vector<Vertex> sub;
  std::vector<Vector> dec;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (is_prefix(v, r[i])) {
      sub.push_back(r[i].substr(v.size()));
      dec.push_back(xr.leaves()[i]);
    }
  return FockVector(Tree(std::move(sub)), std::move(dec));
}

FockVector tau_star(std::string_view v, const FockVector& x) {
  const Tree path = Tree::with_leaf(v);
  std::vector<Vertex> leaves;
  std::vector<Vector> dec;
  const Vector zero = Vector::Zero(x.pair_dim());
  for (const auto& w : path.leaves()) {
    if (w == v) {
      for (std::size_t i = 0; i < x.tree().size(); ++i) {
        leaves.push_back(w + x.tree()[i]);
        dec.push_back(x.leaves()[i]);
      }
    } else {
      leaves.push_back(w);
      dec.push_back(zero);
    }
  }
  return FockVector(Tree(std::move(leaves)), std::move(dec));
}

FockVector rho(const PythagoreanPair& pair, std::string_view v, const FockVector& x) {
  return tau_star(v, tau(pair, v, x));
}

FockVector rho_ray_approx(const PythagoreanPair& pair, const Ray& p, std::size_t n,
                          const FockVector& x) {
  return rho(pair, digits(p, n), x);
}

Complex matrix_coefficient(const PythagoreanPair& pair, const GroupElement& g,
                           const FockVector& x) {
  return inner_product(pair, sigma_act(pair, g, x), x);
}

}  // namespace pyrep
