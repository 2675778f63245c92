// Copyright 2026 The pyrep Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PYREP_THOMPSON_HPP_
#define PYREP_THOMPSON_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pyrep/forest.hpp"
#include "pyrep/ray.hpp"

namespace pyrep {

class WordTooShort : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class RegionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// [t, s]: maps the interval of the i-th leaf of s (domain) onto that of the
// i-th leaf of t (range).
struct TreeDiagram {
  Tree range;
  Tree domain;

  TreeDiagram() = default;
  TreeDiagram(Tree t, Tree s);
  friend bool operator==(const TreeDiagram&, const TreeDiagram&) = default;
};

class GroupElement {
 public:
  GroupElement() = default;  // identity
  explicit GroupElement(const TreeDiagram& d);  // reduces

  const TreeDiagram& diagram() const { return d_; }
  const Tree& range() const { return d_.range; }
  const Tree& domain() const { return d_.domain; }
  bool is_identity() const { return d_.range.trivial(); }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  TreeDiagram d_;
};

GroupElement reduce(const TreeDiagram& d);
TreeDiagram expand(const GroupElement& g, const Tree& domain_refinement);

GroupElement x0();
GroupElement x1();

GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

Vertex apply_to_word(const GroupElement& g, std::string_view w);
Ray apply_to_ray(const GroupElement& g, const Ray& p);
int log2_derivative_at(const GroupElement& g, const Ray& p);
bool in_parabolic(const GroupElement& g, const Ray& p);
bool in_parabolic_hat(const GroupElement& g, const Ray& p);

GroupElement match_vertices(std::string_view v, std::string_view w);
// True when some representative of g has w, v as corresponding leaves.
bool maps_vertex(const GroupElement& g, std::string_view w, std::string_view v);

GroupElement random_element(std::size_t caret_budget, std::uint64_t seed);

}  // namespace pyrep

#endif  // PYREP_THOMPSON_HPP_
