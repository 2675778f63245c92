// Copyright 2026 The pyrep Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PYREP_FORMAT_HPP_
#define PYREP_FORMAT_HPP_

#include <complex>
#include <string>
#include <string_view>

#include "pyrep/classifier.hpp"
#include "pyrep/fock.hpp"
#include "pyrep/pythagorean.hpp"
#include "pyrep/ray.hpp"
#include "pyrep/thompson.hpp"

namespace pyrep {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// 17 significant digits.
std::string format_double(double x);
std::string format_complex(std::complex<double> z);

Tree parse_tree(std::string_view json);
std::string tree_to_json(const Tree& t);

// Accepts "x0", "x1", "id" or {"range": [...], "domain": [...]}.
GroupElement parse_element(std::string_view text);
std::string element_to_json(const GroupElement& g);

// Accepts "l", "r" or {"prefix": "...", "period": "..."}.
Ray parse_ray(std::string_view text);
std::string ray_to_json(const Ray& p);

struct PairData {
  Matrix A;
  Matrix B;
  double tol;
};

// Parses without checking the Pythagorean identity.
PairData parse_pair_data(std::string_view json);
PythagoreanPair parse_pair(std::string_view json, double tol_override = -1);
std::string pair_to_json(const PythagoreanPair& pair);

FockVector parse_fock_vector(std::string_view json);
std::string fock_vector_to_json(const FockVector& x);

std::string report_to_json(const DecompositionReport& r);
std::string report_to_text(const DecompositionReport& r);
// Compact rendering such as "1_F + lambda_{F/F_{b(a)^inf}} + lambda_{F/F_{(ab)^inf}}".
std::string render_summands(const DecompositionReport& r);

}  // namespace pyrep

#endif  // PYREP_FORMAT_HPP_
