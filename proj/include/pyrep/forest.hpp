// Copyright 2026 The pyrep Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PYREP_FOREST_HPP_
#define PYREP_FOREST_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pyrep {

class InvalidTree : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ArityMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Vertices of the infinite binary tree are their root paths over {0,1}.
using Vertex = std::string;

bool is_vertex(std::string_view w);
void check_vertex(std::string_view w);

enum class Region { root, left_side, right_side, centre };

Region vertex_region(std::string_view v);
const char* region_name(Region r);

bool is_prefix(std::string_view p, std::string_view w);
bool is_disjoint(std::string_view v, std::string_view w);

class Tree {
 public:
  Tree();  // trivial tree e
  explicit Tree(std::vector<Vertex> leaves);  // throws InvalidTree

  static Tree caret();
  // Smallest tree having v as a leaf.
  static Tree with_leaf(std::string_view v);

  const std::vector<Vertex>& leaves() const { return leaves_; }
  std::size_t size() const { return leaves_.size(); }
  std::size_t carets() const { return leaves_.size() - 1; }
  bool trivial() const { return leaves_.size() == 1; }
  const Vertex& operator[](std::size_t i) const { return leaves_[i]; }

  // Index of the leaf equal to v, or npos.
  std::size_t find_leaf(std::string_view v) const;
  // Index of the leaf that is a prefix of w, or npos.
  std::size_t leaf_above(std::string_view w) const;

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  std::vector<Vertex> leaves_;
};

bool is_complete_antichain(const std::vector<Vertex>& leaves);

class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<Tree> trees);
  Forest(const Tree& t) : trees_{t} {}  // NOLINT

  static Forest identity(std::size_t n);

  const std::vector<Tree>& trees() const { return trees_; }
  std::size_t roots() const { return trees_.size(); }
  std::size_t leaf_count() const;
  std::size_t carets() const;
  std::vector<Vertex> leaves() const;
  bool trivial() const;

  friend bool operator==(const Forest&, const Forest&) = default;

 private:
  std::vector<Tree> trees_;
};

// f_{k,n}: n roots, the k-th (1-based) tree a caret.
Forest elementary_forest(std::size_t k, std::size_t n);

// g after f: the j-th tree of g grafted at the j-th leaf of f.
Forest compose_forests(const Forest& f, const Forest& g);
Tree graft(const Tree& t, const Forest& f);

Forest tensor(const Forest& f, const Forest& g);

struct Refinement {
  Tree r;
  Forest f;  // graft(t, f) == r
  Forest g;  // graft(s, g) == r
};

Refinement common_refinement(const Tree& t, const Tree& s);

// Forest over the leaves of t whose grafting gives r; r must refine t.
Forest forest_between(const Tree& t, const Tree& r);
bool refines(const Tree& r, const Tree& t);

}  // namespace pyrep

#endif  // PYREP_FOREST_HPP_
