// Copyright 2026 The Zagreb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// C interface to the zagreb library.
//
// Every function returns a zg_status. On failure, zg_last_error() describes
// the problem for the calling thread until its next call into the library.
// Objects are opaque handles released with the matching *_free function;
// free functions accept NULL. Strings returned by accessors are owned by the
// handle and stay valid until it is freed.

#ifndef ZAGREB_ZAGREB_H_
#define ZAGREB_ZAGREB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(ZAGREB_BUILDING_LIBRARY)
#define ZG_API __attribute__((visibility("default")))
#else
#define ZG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zg_status {
  ZG_OK = 0,
  ZG_ERR_INVALID_ARGUMENT = 1,
  ZG_ERR_DOMAIN = 2,
  ZG_ERR_PARSE = 3,
  ZG_ERR_OVERFLOW = 4,
  ZG_ERR_SIZE_GUARD = 5,
  ZG_ERR_IO = 6,
  ZG_ERR_REGIME = 7,
  ZG_ERR_INTERNAL = 99,
} zg_status;

ZG_API const char* zg_version(void);
ZG_API const char* zg_status_name(zg_status status);
ZG_API const char* zg_last_error(void);
// Line (edge lists, 1-based) and column (p-laws, 0-based) of the last
// ZG_ERR_PARSE on this thread; -1 when not applicable.
ZG_API long zg_last_error_line(void);
ZG_API long zg_last_error_column(void);

// ---------------------------------------------------------------------------
// Exact integer vectors.

typedef struct zg_intvec zg_intvec;

ZG_API size_t zg_intvec_size(const zg_intvec* v);
// Decimal text of element i.
ZG_API const char* zg_intvec_string(const zg_intvec* v, size_t i);
// Nearest double; +inf beyond the double range.
ZG_API double zg_intvec_double(const zg_intvec* v, size_t i);
ZG_API void zg_intvec_free(zg_intvec* v);

// ---------------------------------------------------------------------------
// Combinatorics. Results are one-element vectors except for the row.

ZG_API zg_status zg_stirling2(unsigned k, unsigned m, zg_intvec** out);
ZG_API zg_status zg_stirling2_row(unsigned k, zg_intvec** out);
ZG_API zg_status zg_binomial(uint64_t n, uint64_t r, zg_intvec** out);
ZG_API zg_status zg_falling_factorial(uint64_t n, uint64_t j, zg_intvec** out);
// parts has `count` entries summing to n.
ZG_API zg_status zg_multinomial(uint64_t n, const uint64_t* parts,
                                size_t count, zg_intvec** out);

// ---------------------------------------------------------------------------
// Graphs and degree sequences. Vertices are labelled 1..n.

typedef struct zg_graph zg_graph;
typedef struct zg_degrees zg_degrees;

// `endpoints` holds 2 * edge_count labels, edge e = (endpoints[2e],
// endpoints[2e+1]).
ZG_API zg_status zg_graph_from_edges(uint64_t n, const uint64_t* endpoints,
                                     size_t edge_count, zg_graph** out);
// n_override = 0 means "largest label in the file".
ZG_API zg_status zg_graph_read_edge_list(const char* path, uint64_t n_override,
                                         zg_graph** out);
ZG_API zg_status zg_graph_sample(uint64_t n, double p, uint64_t master_seed,
                                 uint64_t stream, zg_graph** out);
ZG_API uint64_t zg_graph_vertex_count(const zg_graph* g);
ZG_API uint64_t zg_graph_edge_count(const zg_graph* g);
ZG_API void zg_graph_free(zg_graph* g);

ZG_API zg_status zg_degrees_of(const zg_graph* g, zg_degrees** out);
ZG_API zg_status zg_degrees_from_array(uint64_t n, const uint64_t* degrees,
                                       zg_degrees** out);
ZG_API zg_status zg_degrees_sample(uint64_t n, double p, uint64_t master_seed,
                                   uint64_t stream, zg_degrees** out);
ZG_API zg_status zg_degrees_complement(const zg_degrees* d, zg_degrees** out);
ZG_API uint64_t zg_degrees_count(const zg_degrees* d);
ZG_API uint64_t zg_degrees_get(const zg_degrees* d, size_t i);
ZG_API void zg_degrees_free(zg_degrees* d);

// ---------------------------------------------------------------------------
// Indices.

// Z^(1..k).
ZG_API zg_status zg_zagreb_vector(const zg_degrees* d, unsigned k,
                                  zg_intvec** out);
// S_2..S_{k+1}.
ZG_API zg_status zg_star_vector(const zg_degrees* d, unsigned k,
                                zg_intvec** out);
// *holds is set to 1 or 0.
ZG_API zg_status zg_check_star_identity(const zg_degrees* d, unsigned k,
                                        int* holds);
ZG_API zg_status zg_check_complement_identity(const zg_degrees* d, unsigned k,
                                              int* holds);

// ---------------------------------------------------------------------------
// Moments of G(n, p).

typedef enum zg_moment_mode {
  ZG_MOMENTS_EXACT = 0,
  ZG_MOMENTS_ASYMPTOTIC = 1,
  ZG_MOMENTS_ENUMERATE = 2,  // n <= 7
} zg_moment_mode;

typedef enum zg_vector_kind {
  ZG_VECTOR_ZAGREB = 0,
  ZG_VECTOR_STARS = 1,
} zg_vector_kind;

typedef struct zg_moments zg_moments;

ZG_API zg_status zg_moments_compute(uint64_t n, double p, unsigned k,
                                    zg_moment_mode mode, zg_vector_kind kind,
                                    zg_moments** out);
ZG_API size_t zg_moments_dim(const zg_moments* m);
ZG_API const char* zg_moments_label(const zg_moments* m, size_t i);
// "exact", "asymptotic", "enumeration" or "montecarlo".
ZG_API const char* zg_moments_source(const zg_moments* m);
ZG_API double zg_moments_mean(const zg_moments* m, size_t i);
ZG_API double zg_moments_cov(const zg_moments* m, size_t i, size_t j);
ZG_API void zg_moments_free(zg_moments* m);

// ---------------------------------------------------------------------------
// p(n) laws, regimes and limiting covariance matrices.

typedef struct zg_regime zg_regime;

// p(n) for a law string. On ZG_ERR_PARSE the column is
// available from zg_last_error_column().
ZG_API zg_status zg_plaw_evaluate(const char* law, uint64_t n, double* p);
ZG_API zg_status zg_regime_classify(const char* law, unsigned k,
                                    zg_regime** out);
ZG_API const char* zg_regime_law(const zg_regime* r);
ZG_API const char* zg_regime_name(const zg_regime* r);
ZG_API const char* zg_regime_limit_law(const zg_regime* r);
ZG_API const char* zg_regime_normalization(const zg_regime* r);
// Returns 1 and stores lambda or c when the regime has a parameter.
ZG_API int zg_regime_parameter(const zg_regime* r, double* value);
ZG_API int zg_regime_single_index_normal(const zg_regime* r);
ZG_API int zg_regime_joint_law_open(const zg_regime* r);
ZG_API uint64_t zg_regime_n0(const zg_regime* r);
ZG_API size_t zg_regime_also_holds_count(const zg_regime* r);
ZG_API const char* zg_regime_also_holds(const zg_regime* r, size_t i);
ZG_API void zg_regime_free(zg_regime* r);

// k x k matrices written row-major into `out` (k * k doubles).
ZG_API zg_status zg_sigma_star(double c, unsigned k, double* out);
ZG_API zg_status zg_sigma_zagreb(double c, unsigned k, double* out);
ZG_API zg_status zg_sigma_star_det(double c, unsigned k, double* out);

// Centering, scaling (k each) and target covariance (k * k, row-major) for
// the Gaussian regime of `law` at n. *target_kind receives "SigmaStar",
// "Sigma", "Ones" or "MarginalIdentity" (static storage).
ZG_API zg_status zg_standardizer(const char* law, uint64_t n, unsigned k,
                                 double* centers, double* scales,
                                 double* target, const char** target_kind);

// ---------------------------------------------------------------------------
// Goodness of fit.

typedef struct zg_test_result {
  const char* name;  // owned by the producing handle or static
  double statistic;
  double p_value;
  double alpha;
  int pass;
  int flagged;
} zg_test_result;

ZG_API zg_status zg_ks_test_normal(const double* sample, size_t size,
                                   double alpha, zg_test_result* out);
// histogram[j] = number of observations equal to j.
ZG_API zg_status zg_chisq_test_poisson(const uint64_t* histogram, size_t size,
                                       double lambda, double alpha,
                                       zg_test_result* out);

// ---------------------------------------------------------------------------
// Monte Carlo.

typedef struct zg_mc_config {
  uint64_t n;
  double p;          // used when plaw is NULL
  const char* plaw;  // p(n) law text, or NULL
  unsigned k;
  uint64_t replicates;
  uint64_t master_seed;
  int collect_zagreb;
  int collect_stars;
  unsigned workers;   // 0 means 1; never changes results
  const char* tests;  // comma-separated subset of "ks,poisson", or NULL
  double alpha;       // 0 means 0.01
} zg_mc_config;

typedef struct zg_samples zg_samples;

ZG_API zg_status zg_sample_run(const zg_mc_config* config, zg_samples** out);
ZG_API uint64_t zg_samples_rows(const zg_samples* s);
ZG_API size_t zg_samples_cols(const zg_samples* s);
ZG_API const char* zg_samples_label(const zg_samples* s, size_t j);
ZG_API double zg_samples_p(const zg_samples* s);
// Exact decimal text of entry (r, j); valid until the next call on `s`.
ZG_API const char* zg_samples_exact(zg_samples* s, uint64_t r, size_t j);
ZG_API double zg_samples_value(const zg_samples* s, uint64_t r, size_t j);
// Writes the CSV to `path`.
ZG_API zg_status zg_samples_write_csv(const zg_samples* s, const char* path);
// Empirical means and unbiased covariance. The handle must be freed.
ZG_API zg_status zg_samples_moments(const zg_samples* s, zg_moments** out);
ZG_API size_t zg_samples_test_count(const zg_samples* s);
ZG_API zg_status zg_samples_test(const zg_samples* s, size_t i,
                                 zg_test_result* out);
ZG_API void zg_samples_free(zg_samples* s);

// ---------------------------------------------------------------------------
// Verification suites.

typedef struct zg_verify_report zg_verify_report;

typedef struct zg_check {
  const char* name;
  int pass;
  double value;
  double threshold;
  const char* detail;
} zg_check;

// NULL past the end.
ZG_API const char* zg_verify_suite_name_at(size_t i);
// `suite` is a suite name or "all"; unknown names give
// ZG_ERR_INVALID_ARGUMENT.
ZG_API zg_status zg_verify_run(const char* suite, uint64_t seed,
                               unsigned workers, zg_verify_report** out);
ZG_API size_t zg_verify_suite_count(const zg_verify_report* r);
ZG_API const char* zg_verify_suite(const zg_verify_report* r, size_t i);
ZG_API int zg_verify_criterion(const zg_verify_report* r, size_t i);
ZG_API double zg_verify_seconds(const zg_verify_report* r, size_t i);
ZG_API int zg_verify_pass(const zg_verify_report* r, size_t i);
ZG_API size_t zg_verify_check_count(const zg_verify_report* r, size_t i);
ZG_API zg_status zg_verify_check(const zg_verify_report* r, size_t i,
                                 size_t j, zg_check* out);
ZG_API size_t zg_verify_test_count(const zg_verify_report* r, size_t i);
ZG_API zg_status zg_verify_test(const zg_verify_report* r, size_t i, size_t j,
                                zg_test_result* out);
ZG_API void zg_verify_free(zg_verify_report* r);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // ZAGREB_ZAGREB_H_
