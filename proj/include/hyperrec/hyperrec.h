// Copyright 2026 The HyperRec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the hyperrec library.
 *
 * Every function returns an hr_status. On failure, hr_last_error() holds a
 * message for the calling thread until its next failing call. Objects are
 * opaque and released with the matching *_free function; freeing NULL is a
 * no-op. Arc and node ids are 0-based and dense.
 */
#ifndef HYPERREC_HYPERREC_H_
#define HYPERREC_HYPERREC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HR_API __declspec(dllexport)
#elif defined(__GNUC__)
#define HR_API __attribute__((visibility("default")))
#else
#define HR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hr_status {
  HR_OK = 0,
  HR_E_INTERNAL = 1,
  HR_E_PARSE = 2,
  HR_E_VALIDATION = 3,
  HR_E_IO = 4,
  HR_E_PRECONDITION = 5,
  HR_E_PARAMETER = 6,
  HR_E_BUDGET = 7,
  HR_E_UNDEFINED = 8,
  HR_E_GENERATION = 9,
  HR_E_BUFFER = 10 /* caller buffer too small; *len holds the size needed */
} hr_status;

HR_API const char* hr_last_error(void);
HR_API const char* hr_status_name(hr_status status);
HR_API const char* hr_version(void);

/* ---- Hypergraphs ---- */

typedef struct hr_graph hr_graph;

typedef enum hr_format {
  HR_FORMAT_AUTO = -1, /* from the file extension */
  HR_FORMAT_TSV = 0,
  HR_FORMAT_JSON = 1
} hr_format;

typedef struct hr_ingest_opts {
  int repair_overlap;  /* drop head nodes from the tail instead of failing */
  size_t max_head;     /* skip arcs with larger head sets; 0 disables */
} hr_ingest_opts;

HR_API hr_status hr_graph_load(const char* path, hr_format format,
                               const hr_ingest_opts* opts, hr_graph** out);
HR_API hr_status hr_graph_parse(const char* text, hr_format format,
                                const hr_ingest_opts* opts, hr_graph** out);
HR_API hr_status hr_graph_write(const hr_graph* g, const char* path,
                                hr_format format);
HR_API void hr_graph_free(hr_graph* g);

HR_API size_t hr_graph_num_nodes(const hr_graph* g);
HR_API size_t hr_graph_num_arcs(const hr_graph* g);
/* Copies the head (side 0) or tail (side 1) of an arc into buf. */
HR_API hr_status hr_graph_arc(const hr_graph* g, uint32_t arc, int side,
                              uint32_t* buf, size_t cap, size_t* len);
HR_API const char* hr_graph_label(const hr_graph* g, uint32_t node);
/* In- and out-degree per node; either buffer may be NULL. */
HR_API hr_status hr_graph_degrees(const hr_graph* g, uint32_t* d_in,
                                  uint32_t* d_out);
/* 1 when every arc has a single tail node. */
HR_API int hr_graph_is_unit_tail(const hr_graph* g);

/* ---- Reciprocity ---- */

typedef struct hr_measure_opts {
  double alpha;
  size_t psi_cap;
  size_t oracle_limit;
  unsigned threads; /* 0 uses every core */
  int continue_on_error;
} hr_measure_opts;

HR_API void hr_measure_opts_default(hr_measure_opts* opts);

/* Per-arc search outcomes, reusable for any alpha. */
typedef struct hr_profiles hr_profiles;
/* Per-arc reciprocity at one alpha. */
typedef struct hr_result hr_result;

typedef struct hr_arc_result {
  double r;           /* NaN when the search failed */
  uint64_t searched;  /* candidate sets evaluated */
  uint32_t omega;
  uint32_t psi;
  size_t set_size;    /* size of the maximising reciprocal set */
  const char* error;  /* NULL unless the search failed; owned by the result */
} hr_arc_result;

HR_API hr_status hr_profiles_compute(const hr_graph* g,
                                     const hr_measure_opts* opts,
                                     hr_profiles** out);
HR_API hr_status hr_profiles_evaluate(const hr_profiles* p, double alpha,
                                      hr_result** out);
HR_API void hr_profiles_free(hr_profiles* p);

HR_API hr_status hr_measure(const hr_graph* g, const hr_measure_opts* opts,
                            hr_result** out);
HR_API size_t hr_result_size(const hr_result* r);
HR_API hr_status hr_result_arc(const hr_result* r, size_t arc,
                               hr_arc_result* out);
HR_API hr_status hr_result_set(const hr_result* r, size_t arc, uint32_t* buf,
                               size_t cap, size_t* len);
/* Copies every r(e) into values, which must hold hr_result_size entries. */
HR_API hr_status hr_result_values(const hr_result* r, double* values);
/* Mean over arcs; HR_E_UNDEFINED if empty or any arc failed. */
HR_API hr_status hr_result_graph_value(const hr_result* r, double* value);
HR_API void hr_result_free(hr_result* r);

/* Exhaustive reference value for one arc; HR_E_BUDGET above the arc limit. */
HR_API hr_status hr_brute_force(const hr_graph* g, uint32_t arc,
                                const hr_measure_opts* opts, double* value);

/* ---- Comparison measures ---- */

typedef enum hr_measure_kind {
  HR_MEASURE_HYPERREC = 0,
  HR_MEASURE_B1, HR_MEASURE_B2, HR_MEASURE_B3, HR_MEASURE_B4,
  HR_MEASURE_B5, HR_MEASURE_B6, HR_MEASURE_B7
} hr_measure_kind;

HR_API const char* hr_measure_name(hr_measure_kind m);
/* Hypergraph-level value; HR_E_PRECONDITION for B2-B5. */
HR_API hr_status hr_graph_measure(const hr_graph* g, hr_measure_kind m,
                                  double alpha, double* value);

typedef struct hr_satisfaction hr_satisfaction;

typedef struct hr_cell {
  hr_measure_kind measure;
  int axiom;       /* 1..8 */
  int applicable;
  size_t trials;
  size_t violations;
  const char* witness; /* owned by the matrix */
} hr_cell;

HR_API hr_status hr_satisfaction_run(size_t trials, uint64_t seed,
                                     double alpha, hr_satisfaction** out);
HR_API size_t hr_satisfaction_size(const hr_satisfaction* s);
HR_API hr_status hr_satisfaction_cell(const hr_satisfaction* s, size_t i,
                                      hr_cell* out);
HR_API void hr_satisfaction_free(hr_satisfaction* s);

/* ---- Generators ---- */

typedef struct hr_dists hr_dists;

typedef enum hr_dist_kind {
  HR_DIST_HEAD = 0,
  HR_DIST_TAIL = 1,
  HR_DIST_ARCS_PER_NODE = 2
} hr_dist_kind;

HR_API hr_status hr_dists_estimate(const hr_graph* ref, hr_dists** out);
HR_API hr_status hr_dists_create(const double* head, size_t n_head,
                                 const double* tail, size_t n_tail,
                                 const double* per_node, size_t n_per_node,
                                 hr_dists** out);
HR_API hr_status hr_dists_get(const hr_dists* d, hr_dist_kind kind,
                              double* buf, size_t cap, size_t* len);
HR_API void hr_dists_free(hr_dists* d);

typedef struct hr_gen_params {
  size_t n;
  size_t initial_arcs;
  double beta1;
  double beta2;
  uint64_t seed;
  int node_degree_attachment; /* 0: group degree, 1: node degree */
  size_t retry_budget;
} hr_gen_params;

HR_API void hr_gen_params_default(hr_gen_params* p);

HR_API hr_status hr_generate_null(const hr_graph* ref, uint64_t seed,
                                  hr_graph** out);
HR_API hr_status hr_generate_redi(const hr_gen_params* p, const hr_dists* d,
                                  hr_graph** out);
HR_API hr_status hr_generate_baseline(const hr_gen_params* p,
                                      const hr_dists* d, hr_graph** out);

HR_API hr_status hr_beta1_grid(size_t nodes, size_t arcs, double* buf,
                               size_t cap, size_t* len);
HR_API hr_status hr_beta2_grid(double* buf, size_t cap, size_t* len);

typedef struct hr_grid_point {
  double beta1;
  double beta2;
  double mean_r;
  double sd_r;
} hr_grid_point;

/* Evaluates every (beta1, beta2) pair in row-major order into points
 * (n_beta1 * n_beta2 entries) and stores the closest one in best. */
HR_API hr_status hr_grid_search(const hr_gen_params* base, const hr_dists* d,
                                double target_r, const double* beta1s,
                                size_t n_beta1, const double* beta2s,
                                size_t n_beta2, size_t seeds,
                                const hr_measure_opts* opts,
                                hr_grid_point* points, hr_grid_point* best);

/* ---- Statistics ---- */

HR_API hr_status hr_correlations(const double* a, const double* b, size_t n,
                                 double* pearson, double* spearman);
HR_API hr_status hr_ks_statistic(const double* a, size_t na, const double* b,
                                 size_t nb, double* d);
HR_API hr_status hr_significance(const double* real, size_t n_real,
                                 const double* null, size_t n_null,
                                 double level, double* z, double* p,
                                 int* reject);

typedef struct hr_quartiles {
  int present; /* 0 for an empty sample */
  size_t count;
  double min, q1, median, q3, max;
} hr_quartiles;

typedef struct hr_split hr_split;

typedef enum hr_split_sample {
  HR_SPLIT_ZERO_H_OUT = 0,
  HR_SPLIT_ZERO_T_IN = 1,
  HR_SPLIT_NONZERO_H_OUT = 2,
  HR_SPLIT_NONZERO_T_IN = 3
} hr_split_sample;

/* Head out-degree and tail in-degree per arc, grouped by r(e) = 0 or > 0.
 * per_arc holds hr_graph_num_arcs values. */
HR_API hr_status hr_degree_split(const hr_graph* g, const double* per_arc,
                                 int trim, hr_split** out);
HR_API hr_status hr_split_values(const hr_split* s, hr_split_sample which,
                                 double* buf, size_t cap, size_t* len);
HR_API hr_status hr_split_summary(const hr_split* s, hr_split_sample which,
                                  hr_quartiles* out);
HR_API void hr_split_free(hr_split* s);

/* r(v) (NaN for isolated nodes) and balance per node; either may be NULL. */
HR_API hr_status hr_node_level(const hr_graph* g, const double* per_arc,
                               double* r_v, double* balance);

typedef struct hr_curve hr_curve;

typedef struct hr_curve_opts {
  size_t window;
  size_t polyorder;
  size_t bins;
  int has_range;
  double range_lo;
  double range_hi;
} hr_curve_opts;

HR_API void hr_curve_opts_default(hr_curve_opts* o);
HR_API hr_status hr_balance_curve(const hr_graph* g, const double* per_arc,
                                  const hr_curve_opts* opts, hr_curve** out);
HR_API size_t hr_curve_size(const hr_curve* c);
/* Each non-NULL buffer receives hr_curve_size entries. */
HR_API hr_status hr_curve_points(const hr_curve* c, double* xs, double* raw,
                                 double* smooth, size_t* counts);
HR_API hr_status hr_mean_gap(const hr_curve* a, const hr_curve* b,
                             double* gap);
HR_API void hr_curve_free(hr_curve* c);

#ifdef __cplusplus
}
#endif

#endif /* HYPERREC_HYPERREC_H_ */
