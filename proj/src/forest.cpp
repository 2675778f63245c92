// Copyright 2026 The pyrep Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pyrep/forest.hpp"

#include <algorithm>

namespace pyrep {

bool is_vertex(std::string_view w) {
  return std::all_of(w.begin(), w.end(), [](char c) { return c == '0' || c == '1'; });
}

void check_vertex(std::string_view w) {
  if (!is_vertex(w)) throw InvalidTree("vertex '" + std::string(w) + "' is not a word over {0,1}");
}

Region vertex_region(std::string_view v) {
  if (v.empty()) return Region::root;
  if (v.find('1') == std::string_view::npos) return Region::left_side;
  if (v.find('0') == std::string_view::npos) return Region::right_side;
  return Region::centre;
}

const char* region_name(Region r) {
  switch (r) {
    case Region::root: return "root";
    case Region::left_side: return "left-side";
    case Region::right_side: return "right-side";
    case Region::centre: return "centre";
  }
  return "?";
}

bool is_prefix(std::string_view p, std::string_view w) {
  return p.size() <= w.size() && w.compare(0, p.size(), p) == 0;
}

bool is_disjoint(std::string_view v, std::string_view w) {
  return !is_prefix(v, w) && !is_prefix(w, v);
}

namespace {

bool antichain_below(const std::vector<Vertex>& l, std::size_t lo, std::size_t hi,
                     const std::string& prefix) {
  if (hi - lo == 1 && l[lo] == prefix) return true;
  const std::size_t k = prefix.size();
  std::size_t mid = lo;
  while (mid < hi && l[mid].size() > k && is_prefix(prefix, l[mid]) && l[mid][k] == '0') ++mid;
  for (std::size_t i = mid; i < hi; ++i)
    if (l[i].size() <= k || !is_prefix(prefix, l[i]) || l[i][k] != '1') return false;
  if (mid == lo || mid == hi) return false;
  return antichain_below(l, lo, mid, prefix + '0') && antichain_below(l, mid, hi, prefix + '1');
}

}  // namespace

bool is_complete_antichain(const std::vector<Vertex>& leaves) {
  if (leaves.empty()) return false;
  for (const auto& v : leaves)
    if (!is_vertex(v)) return false;
  return antichain_below(leaves, 0, leaves.size(), "");
}

Tree::Tree() : leaves_{""} {}

Tree::Tree(std::vector<Vertex> leaves) : leaves_(std::move(leaves)) {
  if (!is_complete_antichain(leaves_)) {
    std::string msg = "leaves do not form a complete antichain:";
    for (const auto& v : leaves_) msg += " '" + v + "'";
    throw InvalidTree(msg);
  }
}

Tree Tree::caret() { return Tree({"0", "1"}); }

Tree Tree::with_leaf(std::string_view v) {
  check_vertex(v);
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == '1') out.push_back(std::string(v.substr(0, i)) + '0');
  out.emplace_back(v);
  for (std::size_t i = v.size(); i-- > 0;)
    if (v[i] == '0') out.push_back(std::string(v.substr(0, i)) + '1');
  return Tree(std::move(out));
}

std::size_t Tree::find_leaf(std::string_view v) const {
  auto it = std::lower_bound(leaves_.begin(), leaves_.end(), v);
  if (it != leaves_.end() && *it == v) return static_cast<std::size_t>(it - leaves_.begin());
  return std::string::npos;
}

std::size_t Tree::leaf_above(std::string_view w) const {
  auto it = std::upper_bound(leaves_.begin(), leaves_.end(), w);
  if (it == leaves_.begin()) return std::string::npos;
  --it;
  if (!is_prefix(*it, w)) return std::string::npos;
  return static_cast<std::size_t>(it - leaves_.begin());
}

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
  if (trees_.empty()) throw InvalidTree("a forest needs at least one tree");
}

Forest Forest::identity(std::size_t n) {
  if (n == 0) throw InvalidTree("a forest needs at least one tree");
  return Forest(std::vector<Tree>(n));
}

std::size_t Forest::leaf_count() const {
  std::size_t n = 0;
  for (const auto& t : trees_) n += t.size();
  return n;
}

std::size_t Forest::carets() const { return leaf_count() - roots(); }

std::vector<Vertex> Forest::leaves() const {
  std::vector<Vertex> out;
  for (const auto& t : trees_) out.insert(out.end(), t.leaves().begin(), t.leaves().end());
  return out;
}

bool Forest::trivial() const {
  return std::all_of(trees_.begin(), trees_.end(), [](const Tree& t) { return t.trivial(); });
}

Forest elementary_forest(std::size_t k, std::size_t n) {
  if (k < 1 || k > n)
    throw std::out_of_range("elementary_forest: index " + std::to_string(k) +
                            " out of range 1.." + std::to_string(n));
  std::vector<Tree> trees(n);
  trees[k - 1] = Tree::caret();
  return Forest(std::move(trees));
}

Tree graft(const Tree& t, const Forest& f) {
  if (f.roots() != t.size())
    throw ArityMismatch("graft: tree has " + std::to_string(t.size()) + " leaves, forest has " +
                        std::to_string(f.roots()) + " roots");
  std::vector<Vertex> out;
  out.reserve(f.leaf_count());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (const auto& w : f.trees()[i].leaves()) out.push_back(t[i] + w);
  return Tree(std::move(out));
}

Forest compose_forests(const Forest& f, const Forest& g) {
  if (f.leaf_count() != g.roots())
    throw ArityMismatch("compose_forests: " + std::to_string(f.leaf_count()) + " leaves vs " +
                        std::to_string(g.roots()) + " roots");
  std::vector<Tree> out;
  std::size_t j = 0;
  for (const auto& t : f.trees()) {
    std::vector<Tree> part(g.trees().begin() + j, g.trees().begin() + j + t.size());
    out.push_back(graft(t, Forest(std::move(part))));
    j += t.size();
  }
  return Forest(std::move(out));
}

Forest tensor(const Forest& f, const Forest& g) {
  std::vector<Tree> out = f.trees();
  out.insert(out.end(), g.trees().begin(), g.trees().end());
  return Forest(std::move(out));
}

Forest forest_between(const Tree& t, const Tree& r) {
  std::vector<Tree> out;
  out.reserve(t.size());
  std::size_t j = 0;
  for (const auto& v : t.leaves()) {
    std::vector<Vertex> sub;
    while (j < r.size() && is_prefix(v, r[j])) sub.push_back(r[j++].substr(v.size()));
    if (sub.empty()) throw InvalidTree("forest_between: tree does not refine leaf '" + v + "'");
    out.emplace_back(std::move(sub));
  }
  if (j != r.size()) throw InvalidTree("forest_between: tree does not refine");
  return Forest(std::move(out));
}

bool refines(const Tree& r, const Tree& t) {
  std::size_t j = 0;
  for (const auto& v : t.leaves()) {
    std::size_t start = j;
    while (j < r.size() && is_prefix(v, r[j])) ++j;
    if (j == start) return false;
  }
  return j == r.size();
}

Refinement common_refinement(const Tree& t, const Tree& s) {
  std::vector<Vertex> out;
  std::size_t i = 0, j = 0;
  while (i < t.size() && j < s.size()) {
    const auto& a = t[i];
    const auto& b = s[j];
    if (a == b) {
      out.push_back(a);
      ++i, ++j;
    } else if (is_prefix(a, b)) {
      out.push_back(b);
      if (++j == s.size() || !is_prefix(a, s[j])) ++i;
    } else if (is_prefix(b, a)) {
      out.push_back(a);
      if (++i == t.size() || !is_prefix(b, t[i])) ++j;
    } else {
      throw InvalidTree("common_refinement: leaf lists out of step");
    }
  }
  Tree r(std::move(out));
  Forest f = forest_between(t, r);
  Forest g = forest_between(s, r);
  return {std::move(r), std::move(f), std::move(g)};
}

}  // namespace pyrep
