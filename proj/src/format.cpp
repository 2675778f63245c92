// Copyright 2026 The pyrep Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pyrep/format.hpp"

#include <cstdio>

#include "json.hpp"

namespace pyrep {

using json = nlohmann::ordered_json;

std::string format_double(double x) {
  if (x == 0) x = 0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(std::complex<double> z) {
  if (z.imag() == 0) return format_double(z.real());
  if (z.real() == 0) return format_double(z.imag()) + "i";
  std::string im = format_double(z.imag());
  if (im[0] != '-') im = "+" + im;
  return format_double(z.real()) + im + "i";
}

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

Tree tree_from(const json& j) {
  if (!j.is_array()) throw ParseError("tree must be an array of leaf words");
  std::vector<Vertex> leaves;
  for (const auto& w : j) leaves.push_back(w.get<std::string>());
  return Tree(std::move(leaves));
}

json tree_json(const Tree& t) {
  json j = json::array();
  for (const auto& v : t.leaves()) j.push_back(v);
  return j;
}

Complex complex_from(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ParseError("complex entries must be numbers or [re, im]");
}

json complex_json(Complex z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }

Matrix matrix_from(const json& j, int d, const char* name) {
  if (!j.is_array() || static_cast<int>(j.size()) != d)
    throw ParseError(std::string(name) + " must have " + std::to_string(d) + " rows");
  Matrix M(d, d);
  for (int i = 0; i < d; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != d)
      throw ParseError(std::string(name) + " row " + std::to_string(i) + " must have " +
                       std::to_string(d) + " entries");
    for (int k = 0; k < d; ++k) M(i, k) = complex_from(row[static_cast<std::size_t>(k)]);
  }
  return M;
}

json matrix_json(const Matrix& M) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < M.cols(); ++k) row.push_back(complex_json(M(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_json(const Vector& v) {
  json j = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(complex_json(v(i)));
  return j;
}

json ray_json(const Ray& p) { return json{{"prefix", p.prefix()}, {"period", p.period()}}; }

}  // namespace

Tree parse_tree(std::string_view text) {
  return guarded("tree", [&] { return tree_from(parse_json(text)); });
}

std::string tree_to_json(const Tree& t) { return tree_json(t).dump(); }

GroupElement parse_element(std::string_view text) {
  if (text == "x0") return x0();
  if (text == "x1") return x1();
  if (text == "id" || text == "e") return GroupElement();
  return guarded("group element", [&] {
    const json j = parse_json(text);
    if (!j.is_object()) throw ParseError("group element must be an object or a generator name");
    return GroupElement(TreeDiagram(tree_from(j.at("range")), tree_from(j.at("domain"))));
  });
}

std::string element_to_json(const GroupElement& g) {
  return json{{"range", tree_json(g.range())}, {"domain", tree_json(g.domain())}}.dump();
}

Ray parse_ray(std::string_view text) {
  if (text == "l") return Ray::left();
  if (text == "r") return Ray::right();
  return guarded("ray", [&] {
    const json j = parse_json(text);
    if (!j.is_object()) throw ParseError("ray must be an object or one of l, r");
    return Ray(j.value("prefix", std::string()), j.at("period").get<std::string>());
  });
}

std::string ray_to_json(const Ray& p) { return ray_json(p).dump(); }

PairData parse_pair_data(std::string_view text) {
  return guarded("pair", [&] {
    const json j = parse_json(text);
    if (!j.is_object()) throw ParseError("pair must be a JSON object");
    const int d = j.at("dim").get<int>();
    if (d < 1) throw ParseError("pair dimension must be at least 1");
    PairData p{matrix_from(j.at("A"), d, "A"), matrix_from(j.at("B"), d, "B"),
               j.value("tol", kIdentityTol)};
    if (!(p.tol >= 0)) throw ParseError("tol must be nonnegative");
    return p;
  });
}

PythagoreanPair parse_pair(std::string_view text, double tol_override) {
  PairData p = parse_pair_data(text);
  return PythagoreanPair(p.A, p.B, tol_override >= 0 ? tol_override : p.tol);
}

std::string pair_to_json(const PythagoreanPair& pair) {
  json j{{"dim", pair.dim()},
         {"A", matrix_json(pair.A())},
         {"B", matrix_json(pair.B())},
         {"tol", pair.tol()}};
  return j.dump();
}

FockVector parse_fock_vector(std::string_view text) {
  return guarded("fock vector", [&] {
    const json j = parse_json(text);
    if (!j.is_object()) throw ParseError("fock vector must be a JSON object");
    Tree t = j.contains("tree") ? tree_from(j.at("tree")) : Tree();
    const json& L = j.at("leaves");
    if (!L.is_array() || L.empty()) throw ParseError("leaves must be a nonempty array");
    std::vector<Vector> leaves;
    for (const auto& v : L) {
      if (!v.is_array() || v.empty()) throw ParseError("each leaf must be a nonempty array");
      Vector x(static_cast<Eigen::Index>(v.size()));
      for (std::size_t i = 0; i < v.size(); ++i) x(static_cast<Eigen::Index>(i)) = complex_from(v[i]);
      leaves.push_back(std::move(x));
    }
    return FockVector(std::move(t), std::move(leaves));
  });
}

std::string fock_vector_to_json(const FockVector& x) {
  json leaves = json::array();
  for (const auto& v : x.leaves()) leaves.push_back(vector_json(v));
  return json{{"tree", tree_json(x.tree())}, {"leaves", std::move(leaves)}}.dump();
}

namespace {

std::string render_one(const Summand& s) {
  const bool unit = s.eigenvalue == Complex(1.0, 0.0);
  std::string body;
  if (s.kind == SummandKind::induced_char) {
    const std::string p = "(" + s.period + ")^inf";
    body = unit ? "lambda_{F/F_{" + p + "}}"
                : "Ind_{F_{" + p + "}}^F chi_{" + format_complex(s.phase) + "}";
  } else {
    const std::string side(1, s.side());
    const std::string half = s.side() == 'l' ? "l.b" : "r.a";
    if (s.kind == SummandKind::one_dim_char)
      body = unit ? "1_F" : "chi_{" + format_complex(s.eigenvalue) + "}^" + side;
    else
      body = unit ? "1_F + lambda_{F/F_{" + half + "}}"
                  : "chi_{" + format_complex(s.eigenvalue) + "}^" + side + " + Ind_{F_{" + half +
                        "}}^F chi_{" + format_complex(s.eigenvalue) + "}";
  }
  if (s.multiplicity == 1) return body;
  return std::to_string(s.multiplicity) + "*(" + body + ")";
}

}  // namespace

std::string render_summands(const DecompositionReport& r) {
  if (r.summands.empty()) return "0";
  std::string out;
  for (const auto& s : r.summands) {
    if (!out.empty()) out += " + ";
    out += render_one(s);
  }
  return out;
}

std::string report_to_json(const DecompositionReport& r) {
  json summands = json::array();
  for (const auto& s : r.summands) {
    json j;
    j["kind"] = kind_name(s.kind);
    if (s.kind == SummandKind::induced_char) j["ray_class"] = s.period;
    else j["side"] = std::string(1, s.side());
    j["eigenvalue"] = complex_json(s.eigenvalue);
    j["period_length"] = s.period_length;
    j["phase"] = complex_json(s.phase);
    j["multiplicity"] = s.multiplicity;
    j["witness_ray"] = ray_json(witness_ray(s));
    j["text"] = s.describe();
    summands.push_back(std::move(j));
  }
  json j{{"dim", r.dim},
         {"dim_diffuse", r.dim_diffuse},
         {"dim_quasi", r.dim_quasi},
         {"dim_residual", r.dim_residual},
         {"level_cap_used", r.level_cap_used},
         {"level_reached", r.level_reached},
         {"level_capped", r.level_capped},
         {"weakly_mixing", r.weakly_mixing},
         {"ind_mixing", r.ind_mixing},
         {"summands", std::move(summands)},
         {"rendering", render_summands(r)}};
  return j.dump(2);
}

std::string report_to_text(const DecompositionReport& r) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::string out;
  out += "dim " + std::to_string(r.dim) + "\n";
  out += "diffuse " + std::to_string(r.dim_diffuse) + "\n";
  out += "quasi-contained " + std::to_string(r.dim_quasi) + "\n";
  out += "residual " + std::to_string(r.dim_residual) + "\n";
  out += "level cap " + std::to_string(r.level_cap_used) + ", reached " +
         std::to_string(r.level_reached) + ", capped " + yn(r.level_capped) + "\n";
  out += std::string("weakly mixing ") + yn(r.weakly_mixing) + "\n";
  out += std::string("Ind-mixing ") + yn(r.ind_mixing) + "\n";
  for (std::size_t i = 0; i < r.summands.size(); ++i)
    out += "summand " + std::to_string(i + 1) + ": " + r.summands[i].describe() + "\n";
  out += "atomic part: " + render_summands(r) + "\n";
  return out;
}

}  // namespace pyrep
