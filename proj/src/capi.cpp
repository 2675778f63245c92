// Copyright 2026 The pyrep Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pyrep/pyrep.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "pyrep/classifier.hpp"
#include "pyrep/fock.hpp"
#include "pyrep/format.hpp"
#include "pyrep/pythagorean.hpp"
#include "pyrep/random_pair.hpp"
#include "pyrep/thompson.hpp"

struct pyrep_pair {
  pyrep::PythagoreanPair value;
};
struct pyrep_element {
  pyrep::GroupElement value;
};
struct pyrep_vector {
  pyrep::FockVector value;
};
struct pyrep_report {
  pyrep::DecompositionReport value;
};

namespace {

thread_local std::string last_error;

pyrep_status fail(pyrep_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
pyrep_status guard(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const pyrep::ParseError& e) {
    return fail(PYREP_ERR_PARSE, e.what());
  } catch (const pyrep::IdentityViolation& e) {
    return fail(PYREP_NEGATIVE, e.what());
  } catch (const pyrep::DimensionMismatch& e) {
    return fail(PYREP_ERR_DIMENSION, e.what());
  } catch (const pyrep::ArityMismatch& e) {
    return fail(PYREP_ERR_DIMENSION, e.what());
  } catch (const pyrep::NotUnitary& e) {
    return fail(PYREP_ERR_NUMERIC, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(PYREP_ERR_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(PYREP_ERR_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(PYREP_ERR_ARGUMENT, e.what());
  } catch (const std::length_error& e) {
    return fail(PYREP_ERR_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PYREP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PYREP_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

pyrep_status null_arg() { return fail(PYREP_ERR_ARGUMENT, "null argument"); }

}  // namespace

extern "C" {

const char* pyrep_version(void) { return "1.0.0"; }

const char* pyrep_last_error(void) { return last_error.c_str(); }

void pyrep_string_free(char* s) { std::free(s); }

pyrep_status pyrep_pair_check(const char* json, double tol, double* defect) {
  if (!json || !defect) return null_arg();
  return guard([&] {
    const pyrep::PairData p = pyrep::parse_pair_data(json);
    *defect = pyrep::pythagorean_defect(p.A, p.B);
    const double t = tol >= 0 ? tol : p.tol;
    return *defect <= t ? PYREP_OK : PYREP_NEGATIVE;
  });
}

pyrep_status pyrep_pair_parse(const char* json, double tol, pyrep_pair** out) {
  if (!json || !out) return null_arg();
  return guard([&] {
    *out = new pyrep_pair{pyrep::parse_pair(json, tol)};
    return PYREP_OK;
  });
}

pyrep_status pyrep_pair_random(int dim, const char* mode, double theta, uint64_t seed,
                               pyrep_pair** out) {
  if (!mode || !out) return null_arg();
  if (dim < 1) return fail(PYREP_ERR_ARGUMENT, "dimension must be at least 1");
  return guard([&] {
    const std::string m = mode;
    if (m == "rotation")
      *out = new pyrep_pair{pyrep::random_rotation_pair(dim, theta, seed)};
    else if (m == "isometry")
      *out = new pyrep_pair{pyrep::random_isometry_pair(dim, seed)};
    else if (m == "atomic")
      *out = new pyrep_pair{pyrep::random_atomic_pair(dim, seed)};
    else
      return fail(PYREP_ERR_ARGUMENT, "unknown random mode '" + m + "'");
    return PYREP_OK;
  });
}

int pyrep_pair_dim(const pyrep_pair* pair) { return pair ? pair->value.dim() : 0; }

pyrep_status pyrep_pair_to_json(const pyrep_pair* pair, char** out) {
  if (!pair || !out) return null_arg();
  return guard([&] {
    *out = dup(pyrep::pair_to_json(pair->value));
    return PYREP_OK;
  });
}

void pyrep_pair_free(pyrep_pair* pair) { delete pair; }

pyrep_status pyrep_element_parse(const char* text, pyrep_element** out) {
  if (!text || !out) return null_arg();
  return guard([&] {
    *out = new pyrep_element{pyrep::parse_element(text)};
    return PYREP_OK;
  });
}

pyrep_status pyrep_element_random(int caret_budget, uint64_t seed, pyrep_element** out) {
  if (!out) return null_arg();
  if (caret_budget < 0) return fail(PYREP_ERR_ARGUMENT, "caret budget must be nonnegative");
  return guard([&] {
    *out = new pyrep_element{pyrep::random_element(static_cast<std::size_t>(caret_budget), seed)};
    return PYREP_OK;
  });
}

pyrep_status pyrep_element_multiply(const pyrep_element* g, const pyrep_element* h,
                                    pyrep_element** out) {
  if (!g || !h || !out) return null_arg();
  return guard([&] {
    *out = new pyrep_element{pyrep::multiply(g->value, h->value)};
    return PYREP_OK;
  });
}

pyrep_status pyrep_element_inverse(const pyrep_element* g, pyrep_element** out) {
  if (!g || !out) return null_arg();
  return guard([&] {
    *out = new pyrep_element{pyrep::inverse(g->value)};
    return PYREP_OK;
  });
}

pyrep_status pyrep_element_to_json(const pyrep_element* g, char** out) {
  if (!g || !out) return null_arg();
  return guard([&] {
    *out = dup(pyrep::element_to_json(g->value));
    return PYREP_OK;
  });
}

pyrep_status pyrep_element_act_ray(const pyrep_element* g, const char* ray, char** out,
                                   int* log2_slope, int* fixes) {
  if (!g || !ray || !out) return null_arg();
  return guard([&] {
    const pyrep::Ray p = pyrep::parse_ray(ray);
    if (log2_slope) *log2_slope = pyrep::log2_derivative_at(g->value, p);
    if (fixes) *fixes = pyrep::in_parabolic(g->value, p) ? 1 : 0;
    *out = dup(pyrep::ray_to_json(pyrep::apply_to_ray(g->value, p)));
    return PYREP_OK;
  });
}

pyrep_status pyrep_element_act_word(const pyrep_element* g, const char* word, char** out) {
  if (!g || !word || !out) return null_arg();
  return guard([&] {
    *out = dup(pyrep::apply_to_word(g->value, word));
    return PYREP_OK;
  });
}

void pyrep_element_free(pyrep_element* g) { delete g; }

pyrep_status pyrep_vector_parse(const char* json, pyrep_vector** out) {
  if (!json || !out) return null_arg();
  return guard([&] {
    *out = new pyrep_vector{pyrep::parse_fock_vector(json)};
    return PYREP_OK;
  });
}

pyrep_status pyrep_vector_to_json(const pyrep_vector* x, char** out) {
  if (!x || !out) return null_arg();
  return guard([&] {
    *out = dup(pyrep::fock_vector_to_json(x->value));
    return PYREP_OK;
  });
}

void pyrep_vector_free(pyrep_vector* x) { delete x; }

pyrep_status pyrep_act(const pyrep_pair* pair, const pyrep_element* g, const pyrep_vector* x,
                       pyrep_vector** out) {
  if (!pair || !g || !x || !out) return null_arg();
  return guard([&] {
    *out = new pyrep_vector{pyrep::sigma_act(pair->value, g->value, x->value)};
    return PYREP_OK;
  });
}

pyrep_status pyrep_coefficient(const pyrep_pair* pair, const pyrep_element* g,
                               const pyrep_vector* x, double* re, double* im) {
  if (!pair || !g || !x || !re || !im) return null_arg();
  return guard([&] {
    const pyrep::Complex c = pyrep::matrix_coefficient(pair->value, g->value, x->value);
    *re = c.real();
    *im = c.imag();
    return PYREP_OK;
  });
}

pyrep_status pyrep_inner_product(const pyrep_pair* pair, const pyrep_vector* x,
                                 const pyrep_vector* y, double* re, double* im) {
  if (!pair || !x || !y || !re || !im) return null_arg();
  return guard([&] {
    const pyrep::Complex c = pyrep::inner_product(pair->value, x->value, y->value);
    *re = c.real();
    *im = c.imag();
    return PYREP_OK;
  });
}

pyrep_status pyrep_decompose(const pyrep_pair* pair, int max_level, pyrep_report** out) {
  if (!pair || !out) return null_arg();
  return guard([&] {
    *out = new pyrep_report{pyrep::classify(pair->value, max_level)};
    return PYREP_OK;
  });
}

pyrep_status pyrep_report_render(const pyrep_report* r, pyrep_format format, char** out) {
  if (!r || !out) return null_arg();
  return guard([&] {
    *out = dup(format == PYREP_FORMAT_TEXT ? pyrep::report_to_text(r->value)
                                           : pyrep::report_to_json(r->value));
    return PYREP_OK;
  });
}

int pyrep_report_summand_count(const pyrep_report* r) {
  return r ? static_cast<int>(r->value.summands.size()) : 0;
}

pyrep_status pyrep_reports_equivalent(const pyrep_report* r1, const pyrep_report* r2) {
  if (!r1 || !r2) return null_arg();
  return guard([&] {
    return pyrep::equivalent_atomic(r1->value, r2->value) ? PYREP_OK : PYREP_NEGATIVE;
  });
}

pyrep_status pyrep_report_verify(const pyrep_pair* pair, const pyrep_report* r, int samples,
                                 int caret_budget, uint64_t seed, double tol) {
  if (!pair || !r) return null_arg();
  if (samples < 0 || caret_budget < 0) return fail(PYREP_ERR_ARGUMENT, "negative sample size");
  return guard([&] {
    std::vector<pyrep::GroupElement> sample;
    for (int i = 0; i < samples; ++i)
      sample.push_back(pyrep::random_element(static_cast<std::size_t>(caret_budget),
                                             seed + static_cast<uint64_t>(i)));
    for (const auto& s : r->value.summands) {
      const bool straight = s.kind == pyrep::SummandKind::straight_pair;
      for (int k = 0; k < s.eigenbasis.cols(); ++k)
        for (auto c : {pyrep::Component::character, pyrep::Component::induced}) {
          if (!straight && c == pyrep::Component::character) continue;
          if (!pyrep::verify_summand(pair->value, s, pyrep::cyclic_vector(s, k, c), sample, tol, c))
            return fail(PYREP_NEGATIVE, "coefficient mismatch for summand " + s.describe());
        }
    }
    return PYREP_OK;
  });
}

void pyrep_report_free(pyrep_report* r) { delete r; }

}  // extern "C"
