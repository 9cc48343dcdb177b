#ifndef POC_H
#define POC_H

/* C interface to the partial order competition toolkit.
 *
 * Conventions: functions returning poc_status set a thread-local error
 * message on failure, readable through poc_last_error() until the next
 * failing call on the same thread. Handle constructors return NULL on
 * failure. Array-filling calls take a capacity and always report the full
 * length, so a first call with capacity 0 sizes the buffer. Coordinates are
 * signed 64-bit integers, points are rows of a row-major array, and axes are
 * numbered 1..dim with axis a stored at bit a-1 of an axis bitmask.
 */

#include <stdint.h>

#ifndef POC_API
#define POC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum poc_status {
    POC_OK = 0,
    POC_EINVAL = 1,    /* malformed argument */
    POC_EPRECOND = 2,  /* input violates a documented precondition */
    POC_EBUDGET = 3,   /* instance exceeds a built-in resource cap */
    POC_EINTERNAL = 4, /* self-check failed; a bug */
    POC_ENOMEM = 5,
} poc_status;

POC_API const char *poc_last_error(void);
/* status of the most recent failing call on this thread; POC_OK when none
 * has failed yet */
POC_API poc_status poc_last_status(void);

/* ---- pairwise predicates on raw coordinate arrays (dim entries each) ---- */

/* out = 1 when u precedes v on every axis; strict != 0 demands strictly */
POC_API poc_status poc_precedes(int32_t dim, const int64_t *u, const int64_t *v, int32_t strict,
                                int32_t *out);
POC_API poc_status poc_comparable(int32_t dim, const int64_t *u, const int64_t *v, int32_t *out);
POC_API poc_status poc_min_point(int32_t dim, const int64_t *u, const int64_t *v,
                                 int64_t *out_coords);

/* number of order types any incomparable pair of dimension dim can have:
 * 2^(dim-1) - 1 */
POC_API poc_status poc_count_order_types(int32_t dim, uint64_t *out);

/* order types of an incomparable pair, each encoded as the axis bitmask of
 * the part containing axis 1; fills up to cap entries, sets *count to the
 * total, ascending by member list */
POC_API poc_status poc_order_types(int32_t dim, const int64_t *u, const int64_t *v,
                                   uint64_t *masks, int64_t cap, int64_t *count);

/* ---- competition graph of the strict coordinatewise order ---- */

typedef struct poc_compete_result poc_compete_result;

/* coords holds n rows of dim entries forming a point set (no repeated rows);
 * vertices are numbered 0..n-1 */
POC_API poc_compete_result *poc_compete_new(int32_t dim, int64_t n, const int64_t *coords);
POC_API void poc_compete_free(poc_compete_result *res);
POC_API int64_t poc_compete_edge_count(const poc_compete_result *res);
POC_API poc_status poc_compete_edge(const poc_compete_result *res, int64_t i, int64_t *u,
                                    int64_t *v);
POC_API int64_t poc_compete_arc_count(const poc_compete_result *res);
/* arc i points from predator to prey */
POC_API poc_status poc_compete_arc(const poc_compete_result *res, int64_t i, int64_t *predator,
                                   int64_t *prey);

/* ---- chains and antichains in the plane ---- */

/* coords holds npts rows of 2 entries; needs npts >= n*n + 1. kind becomes 0
 * for a chain, 1 for a pairwise-incomparable set; indices (ascending into
 * the input) get up to cap entries, *len the full length (>= n + 1) */
POC_API poc_status poc_chain_or_antichain(int64_t npts, const int64_t *coords, int32_t n,
                                          int32_t *kind, int32_t *indices, int64_t cap,
                                          int64_t *len);

/* minimum input size for poc_extract_triple: 2^(2^(d-t+1)) + 1 */
POC_API poc_status poc_extraction_threshold(int32_t d, int32_t t, uint64_t *out);

/* three input indices (scan order) monotone on axis 1 and on every axis
 * t..dim, plus the per-round retained index sets: trace gets the rounds
 * concatenated (up to trace_cap entries, *trace_len the total), round_sizes
 * the per-round lengths (up to rounds_cap, *rounds the round count) */
POC_API poc_status poc_extract_triple(int32_t dim, int32_t t, int64_t npts, const int64_t *coords,
                                      int32_t *triple, int32_t *trace, int64_t trace_cap,
                                      int64_t *trace_len, int64_t *round_sizes, int64_t rounds_cap,
                                      int64_t *rounds);

/* ---- property checks over seeded random instances ---- */

typedef struct poc_verify_options {
    int32_t d;           /* ambient dimension, default 3 */
    int32_t s_size;      /* designated part size for "witness", 1 or 2 */
    int32_t n_es;        /* chain/antichain parameter */
    int32_t t_extract;   /* first retained axis for "extraction" */
    int32_t parts;       /* parts for "forbidden" */
    int32_t part_points; /* points per part for "forbidden" */
} poc_verify_options;

typedef struct poc_verify_report {
    int32_t trials;
    int32_t passes;
    int32_t failures;
    uint64_t seed;
    char first_failure[512]; /* empty when everything passed */
} poc_verify_report;

/* comma-separated list of known check names; static storage */
POC_API const char *poc_verify_checks(void);
POC_API void poc_verify_options_default(poc_verify_options *out);
POC_API poc_status poc_verify(const char *check, int32_t trials, uint64_t seed,
                              const poc_verify_options *opts, poc_verify_report *out);

/* ---- least dimension whose strict order realizes a graph ---- */

typedef struct poc_search_budget {
    int32_t d_max;       /* default 3 */
    int32_t k_max;       /* padding budget; -1 means one point per edge */
    int32_t rank_cap;    /* per-axis rank range; 0 means the vertex count */
    int32_t use_oracles; /* nonzero: characterizations decide dimensions <= 2 */
    int64_t node_limit;  /* candidate tries per dimension sweep; 0 unlimited */
    int32_t threads;
} poc_search_budget;

POC_API void poc_search_budget_default(poc_search_budget *out);

typedef struct poc_dim_result poc_dim_result;

/* edges holds m pairs (u, v) of vertex indices 0..n-1 */
POC_API poc_dim_result *poc_dim_search(int32_t n, int64_t m, const int32_t *edges,
                                       const poc_search_budget *budget);
/* complete multipartite probe: gamma parts of beta vertices */
POC_API poc_dim_result *poc_probe(int32_t beta, int32_t gamma, const poc_search_budget *budget);
POC_API void poc_dim_result_free(poc_dim_result *res);

/* 0 exact, 1 exhausted (no realization within d_max), 2 inconclusive */
POC_API int32_t poc_dim_status(const poc_dim_result *res);
POC_API const char *poc_dim_status_name(int32_t status);
/* returns 1 and sets *dim when the dimension is known */
POC_API int32_t poc_dim_value(const poc_dim_result *res, int32_t *dim);
POC_API int32_t poc_dim_lower_bound(const poc_dim_result *res);
POC_API int64_t poc_dim_total_nodes(const poc_dim_result *res);
POC_API const char *poc_dim_note(const poc_dim_result *res);

POC_API int64_t poc_dim_cell_count(const poc_dim_result *res);
/* status: 0 witness, 1 exhausted, 2 pruned, 3 aborted, 4 skipped */
POC_API poc_status poc_dim_cell(const poc_dim_result *res, int64_t i, int32_t *d, int32_t *k,
                                int32_t *status, int64_t *nodes);
POC_API const char *poc_cell_status_name(int32_t status);

POC_API int32_t poc_dim_witness_present(const poc_dim_result *res);
POC_API int32_t poc_dim_witness_verified(const poc_dim_result *res);
/* wd/wk: dimension and padding count of the witness; npoints/dim: size and
 * coordinate dimension of its configuration */
POC_API poc_status poc_dim_witness_shape(const poc_dim_result *res, int32_t *wd, int32_t *wk,
                                         int64_t *npoints, int32_t *dim);
/* label is NUL-terminated and truncated to label_cap - 1 characters; coords
 * gets the point's dim entries. Vertex points come first, under the labels
 * "0".."n-1"; padding points follow */
POC_API poc_status poc_dim_witness_point(const poc_dim_result *res, int64_t i, char *label,
                                         int64_t label_cap, int64_t *coords);

#ifdef __cplusplus
}
#endif

#endif /* POC_H */
