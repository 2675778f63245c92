/* Copyright 2026 The pyrep Authors.
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to libpyrep. Objects are opaque handles released with the
 * matching *_free function. Strings returned through char** are owned by the
 * caller and released with pyrep_string_free. Every call returns a status;
 * pyrep_last_error gives the message of the last failure on this thread.
 */

#ifndef PYREP_PYREP_H_
#define PYREP_PYREP_H_

#include <stdint.h>

#if defined(_WIN32)
#if defined(PYREP_BUILDING)
#define PYREP_API __declspec(dllexport)
#else
#define PYREP_API __declspec(dllimport)
#endif
#else
#define PYREP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pyrep_status {
  PYREP_OK = 0,
  PYREP_NEGATIVE = 1, /* identity violated, inequivalent, ... */
  PYREP_ERR_PARSE = 2,
  PYREP_ERR_DIMENSION = 3,
  PYREP_ERR_ARGUMENT = 4,
  PYREP_ERR_NUMERIC = 5,
  PYREP_ERR_INTERNAL = 6
} pyrep_status;

typedef struct pyrep_pair pyrep_pair;
typedef struct pyrep_element pyrep_element;
typedef struct pyrep_vector pyrep_vector;
typedef struct pyrep_report pyrep_report;

typedef enum pyrep_format { PYREP_FORMAT_JSON = 0, PYREP_FORMAT_TEXT = 1 } pyrep_format;

PYREP_API const char* pyrep_version(void);
PYREP_API const char* pyrep_last_error(void);
PYREP_API void pyrep_string_free(char* s);

/* Max-norm defect of A*A + B*B - I for a pair file, without validation.
 * Returns PYREP_OK when defect <= tol (tol < 0: the file's tol) and
 * PYREP_NEGATIVE otherwise. */
PYREP_API pyrep_status pyrep_pair_check(const char* json, double tol, double* defect);
/* tol < 0 keeps the file's tol. */
PYREP_API pyrep_status pyrep_pair_parse(const char* json, double tol, pyrep_pair** out);
/* mode: "rotation" (uses theta), "isometry" or "atomic". */
PYREP_API pyrep_status pyrep_pair_random(int dim, const char* mode, double theta, uint64_t seed,
                                         pyrep_pair** out);
PYREP_API int pyrep_pair_dim(const pyrep_pair* pair);
PYREP_API pyrep_status pyrep_pair_to_json(const pyrep_pair* pair, char** out);
PYREP_API void pyrep_pair_free(pyrep_pair* pair);

/* text: "x0", "x1", "id" or the element JSON. */
PYREP_API pyrep_status pyrep_element_parse(const char* text, pyrep_element** out);
PYREP_API pyrep_status pyrep_element_random(int caret_budget, uint64_t seed, pyrep_element** out);
PYREP_API pyrep_status pyrep_element_multiply(const pyrep_element* g, const pyrep_element* h,
                                              pyrep_element** out);
PYREP_API pyrep_status pyrep_element_inverse(const pyrep_element* g, pyrep_element** out);
PYREP_API pyrep_status pyrep_element_to_json(const pyrep_element* g, char** out);
/* Image of a ray ("l", "r" or ray JSON); also the log2 slope at the ray when
 * log2_slope is not NULL and membership of the stabiliser when fixes is not NULL. */
PYREP_API pyrep_status pyrep_element_act_ray(const pyrep_element* g, const char* ray, char** out,
                                             int* log2_slope, int* fixes);
/* Image of a finite binary word. */
PYREP_API pyrep_status pyrep_element_act_word(const pyrep_element* g, const char* word, char** out);
PYREP_API void pyrep_element_free(pyrep_element* g);

PYREP_API pyrep_status pyrep_vector_parse(const char* json, pyrep_vector** out);
PYREP_API pyrep_status pyrep_vector_to_json(const pyrep_vector* x, char** out);
PYREP_API void pyrep_vector_free(pyrep_vector* x);

PYREP_API pyrep_status pyrep_act(const pyrep_pair* pair, const pyrep_element* g,
                                 const pyrep_vector* x, pyrep_vector** out);
PYREP_API pyrep_status pyrep_coefficient(const pyrep_pair* pair, const pyrep_element* g,
                                         const pyrep_vector* x, double* re, double* im);
PYREP_API pyrep_status pyrep_inner_product(const pyrep_pair* pair, const pyrep_vector* x,
                                           const pyrep_vector* y, double* re, double* im);

/* max_level < 0 means the pair dimension. */
PYREP_API pyrep_status pyrep_decompose(const pyrep_pair* pair, int max_level, pyrep_report** out);
PYREP_API pyrep_status pyrep_report_render(const pyrep_report* r, pyrep_format format, char** out);
PYREP_API int pyrep_report_summand_count(const pyrep_report* r);
/* PYREP_OK when the atomic parts agree, PYREP_NEGATIVE when they differ. */
PYREP_API pyrep_status pyrep_reports_equivalent(const pyrep_report* r1, const pyrep_report* r2);
/* Checks every summand of the report against the Fock-space coefficients on
 * random elements; PYREP_NEGATIVE on the first mismatch. */
PYREP_API pyrep_status pyrep_report_verify(const pyrep_pair* pair, const pyrep_report* r,
                                           int samples, int caret_budget, uint64_t seed,
                                           double tol);
PYREP_API void pyrep_report_free(pyrep_report* r);

#ifdef __cplusplus
}
#endif

#endif /* PYREP_PYREP_H_ */
