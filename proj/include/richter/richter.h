////////////////////////////////////////////////////////////////////////////////
//                                                                            //
//  Copyright 2026 The richter developers                                     //
//                                                                            //
//  Licensed under the Apache License, Version 2.0 (the "License");           //
//  you may not use this file except in compliance with the License.          //
//  You may obtain a copy of the License at                                   //
//                                                                            //
//      http://www.apache.org/licenses/LICENSE-2.0                            //
//                                                                            //
//  Unless required by applicable law or agreed to in writing, software       //
//  distributed under the License is distributed on an "AS IS" BASIS,         //
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.  //
//  See the License for the specific language governing permissions and       //
//  limitations under the License.                                            //
//                                                                            //
////////////////////////////////////////////////////////////////////////////////

#ifndef RICHTER_RICHTER_H
#define RICHTER_RICHTER_H

/*
 * C interface to the richter library: atomic reduction of discrete measures,
 * two-point mean-value certificates, and compressed cubature rules.
 *
 * Every object is an opaque handle owned by the caller and released with the
 * matching *_free function. Functions return an rch_status; on failure the
 * message is available from rch_last_error() on the same thread until the
 * next failing call. Strings returned through char** are released with
 * rch_string_free.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define RCH_API __declspec(dllexport)
#else
#define RCH_API __attribute__((visibility("default")))
#endif

typedef enum rch_status {
  RCH_OK = 0,
  RCH_ERR_INVALID_ARGUMENT = 1,
  RCH_ERR_DOMAIN = 2,   /* zero mass, no mean-value witness, non-finite integrand */
  RCH_ERR_NUMERICAL = 3,
  RCH_ERR_PARSE = 4,
  RCH_ERR_IO = 5,
  RCH_ERR_INTERNAL = 6
} rch_status;

typedef struct rch_measure rch_measure;
typedef struct rch_function rch_function;
typedef struct rch_rule rch_rule;
typedef struct rch_certificate rch_certificate;

typedef struct rch_reduction_report {
  size_t initial_support;
  size_t final_support;
  size_t iterations;
  size_t rank_used;
  size_t basis_dim;
  double max_relative_moment_residual;
} rch_reduction_report;

typedef struct rch_witness {
  double x;
  double f_value;
  double mean;
  double residual;
  double tol_f;
} rch_witness;

typedef struct rch_exactness {
  double basis_max_rel_err;
  double sampled_max_rel_err;
  size_t trials;
  uint64_t seed;
  unsigned degree;
} rch_exactness;

typedef double (*rch_callback)(const double* x, size_t dimension, void* user);

RCH_API const char* rch_last_error(void);
RCH_API const char* rch_status_name(rch_status status);
RCH_API const char* rch_version(void);
RCH_API void rch_string_free(char* s);

/* ---- measures ---------------------------------------------------------- */

/* coords is row-major, count x dimension. The result is canonical. */
RCH_API rch_status rch_measure_create(size_t dimension, size_t count, const double* coords,
                                      const double* weights, rch_measure** out);
/* CSV (header x1,...,xd[,w]) or JSON measure file. */
RCH_API rch_status rch_measure_load(const char* path, rch_measure** out);
/* Format chosen by extension: ".json" writes JSON, anything else CSV. */
RCH_API rch_status rch_measure_save(const rch_measure* m, const char* path);
RCH_API rch_status rch_measure_to_json(const rch_measure* m, char** out);
/* density may be NULL for density 1. box is lo0,hi0,lo1,hi1,... */
RCH_API rch_status rch_measure_grid(const rch_function* density, size_t dimension,
                                    const size_t* cells_per_axis, const double* box,
                                    rch_measure** out);
RCH_API rch_status rch_measure_monte_carlo(const rch_function* density, size_t dimension,
                                           size_t count, uint64_t seed, const double* box,
                                           rch_measure** out);
RCH_API void rch_measure_free(rch_measure* m);

RCH_API size_t rch_measure_size(const rch_measure* m);
RCH_API size_t rch_measure_dimension(const rch_measure* m);
RCH_API double rch_measure_mass(const rch_measure* m);
RCH_API uint64_t rch_measure_hash(const rch_measure* m);
RCH_API rch_status rch_measure_atom(const rch_measure* m, size_t index, double* coords_out,
                                    double* weight_out);
RCH_API rch_status rch_measure_integrate(const rch_measure* m, const rch_function* f,
                                         double* out);

/* ---- functions --------------------------------------------------------- */

/* Arithmetic expression over x1..xd; see README for the grammar. */
RCH_API rch_status rch_function_parse(const char* expression, size_t dimension,
                                      rch_function** out);
RCH_API rch_status rch_function_from_callback(size_t dimension, rch_callback fn, void* user,
                                              rch_function** out);
RCH_API rch_status rch_function_eval(const rch_function* f, const double* x, double* out);
RCH_API size_t rch_function_dimension(const rch_function* f);
RCH_API void rch_function_free(rch_function* f);

/* ---- moments and reduction --------------------------------------------- */

/* Graded-lex monomial moments of total degree <= degree. With scaled != 0 the
 * monomials are evaluated after mapping the measure's bounding box onto
 * [-1,1]^d. out must hold rch_basis_dimension(degree, d) values. */
RCH_API rch_status rch_basis_dimension(unsigned degree, size_t dimension, size_t* out);
RCH_API rch_status rch_moments(const rch_measure* m, unsigned degree, int scaled, double* out,
                               size_t out_len);

/* Reduces m against the span of functions (plus the constant when
 * adjoin_constant != 0). report may be NULL. */
RCH_API rch_status rch_reduce(const rch_measure* m, const rch_function* const* functions,
                              size_t function_count, double tol, int adjoin_constant,
                              rch_measure** out, rch_reduction_report* report);

/* ---- mean value -------------------------------------------------------- */

RCH_API rch_status rch_two_point_mvt(const rch_measure* m, const rch_function* f, double tol,
                                     rch_certificate** out);
RCH_API double rch_certificate_lambda(const rch_certificate* c);
RCH_API double rch_certificate_mean(const rch_certificate* c);
RCH_API double rch_certificate_residual(const rch_certificate* c);
RCH_API int rch_certificate_degenerate(const rch_certificate* c);
/* which = 0 for x0, 1 for x1. coords_out holds dimension values. */
RCH_API rch_status rch_certificate_point(const rch_certificate* c, int which, double* coords_out,
                                         double* f_value_out);
RCH_API rch_status rch_certificate_to_json(const rch_certificate* c, char** out);
RCH_API void rch_certificate_free(rch_certificate* c);

/* density may be NULL for Lebesgue. tol_x <= 0 selects 1e-10 (hi - lo). */
RCH_API rch_status rch_one_point_mvt_1d(const rch_function* f, double lo, double hi,
                                        const rch_function* density, size_t grid, double tol_x,
                                        rch_witness* out);
RCH_API rch_status rch_witness_to_json(const rch_witness* w, char** out);

/* ---- cubature ---------------------------------------------------------- */

/* source_kind/source_detail may be NULL. */
RCH_API rch_status rch_compress(const rch_measure* cloud, unsigned degree, double tol,
                                const char* source_kind, const char* source_detail,
                                rch_rule** out);
RCH_API rch_status rch_rule_load(const char* path, rch_rule** out);
RCH_API rch_status rch_rule_to_json(const rch_rule* r, char** out);
RCH_API size_t rch_rule_size(const rch_rule* r);
RCH_API size_t rch_rule_dimension(const rch_rule* r);
RCH_API unsigned rch_rule_degree(const rch_rule* r);
RCH_API double rch_rule_moment_residual(const rch_rule* r);
RCH_API rch_status rch_rule_node(const rch_rule* r, size_t index, double* coords_out,
                                 double* weight_out);
RCH_API void rch_rule_free(rch_rule* r);

RCH_API rch_status rch_verify_exactness(const rch_rule* r, const rch_measure* reference,
                                        unsigned degree, size_t trials, uint64_t seed,
                                        rch_exactness* out, char** json_out);

/* ---- files ------------------------------------------------------------- */

RCH_API rch_status rch_write_text(const char* path, const char* contents);

#ifdef __cplusplus
}
#endif

#endif /* RICHTER_RICHTER_H */
