// Copyright 2026 The pyrep Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pyrep/thompson.hpp"

#include <algorithm>
#include <random>

namespace pyrep {

TreeDiagram::TreeDiagram(Tree t, Tree s) : range(std::move(t)), domain(std::move(s)) {
  if (range.size() != domain.size())
    throw ArityMismatch("tree diagram: range has " + std::to_string(range.size()) +
                        " leaves, domain has " + std::to_string(domain.size()));
}

namespace {

bool is_caret_pair(const Vertex& x, const Vertex& y) {
  const std::size_t n = x.size();
  return n > 0 && y.size() == n && x[n - 1] == '0' && y[n - 1] == '1' &&
         x.compare(0, n - 1, y, 0, n - 1) == 0;
}

TreeDiagram reduced(const TreeDiagram& d) {
  std::vector<Vertex> r, s;
  r.reserve(d.range.size());
  s.reserve(d.range.size());
  for (std::size_t i = 0; i < d.range.size(); ++i) {
    r.push_back(d.range[i]);
    s.push_back(d.domain[i]);
    while (r.size() >= 2) {
      const std::size_t k = r.size();
      if (!is_caret_pair(r[k - 2], r[k - 1]) || !is_caret_pair(s[k - 2], s[k - 1])) break;
      r.pop_back();
      s.pop_back();
      r.back().pop_back();
      s.back().pop_back();
    }
  }
  return TreeDiagram(Tree(std::move(r)), Tree(std::move(s)));
}

}  // namespace

GroupElement::GroupElement(const TreeDiagram& d) : d_(reduced(d)) {}

GroupElement reduce(const TreeDiagram& d) { return GroupElement(d); }

TreeDiagram expand(const GroupElement& g, const Tree& domain_refinement) {
  Forest f = forest_between(g.domain(), domain_refinement);
  return TreeDiagram(graft(g.range(), f), domain_refinement);
}

GroupElement x0() { return GroupElement(TreeDiagram(Tree({"0", "10", "11"}), Tree({"00", "01", "1"}))); }

GroupElement x1() {
  return GroupElement(TreeDiagram(Tree({"0", "10", "110", "111"}), Tree({"0", "100", "101", "11"})));
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  Refinement c = common_refinement(g.domain(), h.range());
  return reduce(TreeDiagram(graft(g.range(), c.f), graft(h.domain(), c.g)));
}

GroupElement inverse(const GroupElement& g) {
  return GroupElement(TreeDiagram(g.domain(), g.range()));
}

Vertex apply_to_word(const GroupElement& g, std::string_view w) {
  check_vertex(w);
  const std::size_t i = g.domain().leaf_above(w);
  if (i == std::string::npos)
    throw WordTooShort("word '" + std::string(w) + "' is shorter than its domain leaf");
  return g.range()[i] + std::string(w.substr(g.domain()[i].size()));
}

namespace {

std::size_t matched_leaf(const GroupElement& g, const Ray& p) {
  std::size_t depth = 0;
  for (const auto& v : g.domain().leaves()) depth = std::max(depth, v.size());
  return g.domain().leaf_above(digits(p, depth));
}

}  // namespace

Ray apply_to_ray(const GroupElement& g, const Ray& p) {
  const std::size_t i = matched_leaf(g, p);
  return prepend(letters_of(g.range()[i]), shift(p, g.domain()[i].size()));
}

int log2_derivative_at(const GroupElement& g, const Ray& p) {
  const std::size_t i = matched_leaf(g, p);
  return static_cast<int>(g.domain()[i].size()) - static_cast<int>(g.range()[i].size());
}

bool in_parabolic(const GroupElement& g, const Ray& p) { return apply_to_ray(g, p) == p; }

bool in_parabolic_hat(const GroupElement& g, const Ray& p) {
  return in_parabolic(g, p) && log2_derivative_at(g, p) == 0;
}

namespace {

void split_leaf(std::vector<Vertex>& leaves, std::size_t i) {
  Vertex v = leaves[i];
  leaves[i] = v + '0';
  leaves.insert(leaves.begin() + static_cast<std::ptrdiff_t>(i) + 1, v + '1');
}

}  // namespace

GroupElement match_vertices(std::string_view v, std::string_view w) {
  const Region rv = vertex_region(v), rw = vertex_region(w);
  if (rv != rw || rv == Region::root)
    throw RegionMismatch(std::string("match_vertices: regions ") + region_name(rv) + " and " +
                         region_name(rw));
  std::vector<Vertex> t = Tree::with_leaf(v).leaves();
  std::vector<Vertex> s = Tree::with_leaf(w).leaves();
  std::size_t iv = t.size() - 1 - std::count(v.begin(), v.end(), '0');
  std::size_t iw = s.size() - 1 - std::count(w.begin(), w.end(), '0');
  while (iv < iw) split_leaf(t, 0), ++iv;
  while (iw < iv) split_leaf(s, 0), ++iw;
  while (t.size() < s.size()) split_leaf(t, t.size() - 1);
  while (s.size() < t.size()) split_leaf(s, s.size() - 1);
  return reduce(TreeDiagram(Tree(std::move(t)), Tree(std::move(s))));
}

bool maps_vertex(const GroupElement& g, std::string_view w, std::string_view v) {
  try {
    return apply_to_word(g, w) == v;
  } catch (const WordTooShort&) {
    return false;
  }
}

namespace {

std::vector<Vertex> random_leaves(std::size_t carets, std::mt19937_64& rng) {
  std::vector<Vertex> leaves{""};
  for (std::size_t k = 0; k < carets; ++k) split_leaf(leaves, rng() % leaves.size());
  return leaves;
}

}  // namespace

GroupElement random_element(std::size_t caret_budget, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n = rng() % (caret_budget + 1);
  Tree t(random_leaves(n, rng));
  Tree s(random_leaves(n, rng));
  return reduce(TreeDiagram(std::move(t), std::move(s)));
}

}  // namespace pyrep
