#ifndef RATIOFORGE_H
#define RATIOFORGE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RfStatus {
  RF_STATUS_OK = 0,
  RF_STATUS_NULL_POINTER = 1,
  RF_STATUS_INVALID_ARGUMENT = 2,
  RF_STATUS_TOO_LARGE = 3,
  RF_STATUS_INCOMPATIBLE = 4,
  RF_STATUS_INTERNAL = 5,
  RF_STATUS_PANIC = 6,
} RfStatus;

// Algorithm codes accepted as `int32_t` by the solver functions.
typedef enum RfAlgo {
  RF_ALGO_SUPER_GREEDY = 0,
  RF_ALGO_FRANK_WOLFE = 1,
  RF_ALGO_FUJISHIGE_WOLFE = 2,
  // Exact, push-relabel.
  RF_ALGO_FLOW = 3,
  // Exact, Edmonds-Karp.
  RF_ALGO_EXACT_FLOW_BASELINE = 4,
  RF_ALGO_BRUTE = 5,
} RfAlgo;

// Weighted bipartite graph handle.
typedef struct RfBipartite RfBipartite;

// Undirected graph handle.
typedef struct RfGraph RfGraph;

// Solver output handle.
typedef struct RfResult RfResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Copies the last error message of this thread into `buf` (NUL-terminated,
// truncated to `cap`) and returns the full message length.
//
// # Safety
// `buf` must be writable for `cap` bytes, or null with `cap == 0`.
size_t rf_last_error(char *buf, size_t cap);

// Builds a graph on `n` vertices from `m` edges `(us[i], vs[i])`. `ws` may
// be null for unit weights.
//
// # Safety
// `us`, `vs` (and `ws` unless null) must hold `m` elements; `out` must be
// writable.
enum RfStatus rf_graph_new(size_t n,
                           size_t m,
                           const size_t *us,
                           const size_t *vs,
                           const double *ws,
                           struct RfGraph **out);

// # Safety
// `g` must come from [`rf_graph_new`] and not be freed yet; null is ignored.
void rf_graph_free(struct RfGraph *g);

// Builds a bipartite graph with `left` left vertices and right vertex
// weights `weights[0..right]`, from `m` edges `(ls[i], rs[i])`.
//
// # Safety
// Arrays must hold the stated number of elements; `out` must be writable.
enum RfStatus rf_bipartite_new(size_t left,
                               size_t right,
                               const double *weights,
                               size_t m,
                               const size_t *ls,
                               const size_t *rs,
                               struct RfBipartite **out);

// # Safety
// `b` must come from [`rf_bipartite_new`] and not be freed yet; null is
// ignored.
void rf_bipartite_free(struct RfBipartite *b);

// Densest subgraph: maximizes `|E(S)|/|S|`. `iters` and `eps` apply to the
// iterative algorithms only.
//
// # Safety
// `g` must be a live graph handle; `out` must be writable.
enum RfStatus rf_dsg_solve(const struct RfGraph *g,
                           int32_t algo,
                           size_t iters,
                           double eps,
                           struct RfResult **out);

// Heavy nodes in a small neighbourhood: maximizes `w(N̄(S))/|S|` over the
// left side.
//
// # Safety
// `b` must be a live bipartite handle; `out` must be writable.
enum RfStatus rf_hnsn_solve(const struct RfBipartite *b,
                            int32_t algo,
                            size_t iters,
                            double eps,
                            struct RfResult **out);

// Minimum-norm point of the base contrapolymatroid of `|E(.)|`. The result
// value is `||x||^2` and the set is the densest prefix of `x`.
//
// # Safety
// `g` must be a live graph handle; `out` must be writable.
enum RfStatus rf_dsg_mnp(const struct RfGraph *g,
                         int32_t algo,
                         size_t iters,
                         double eps,
                         struct RfResult **out);

// Maximum flow from `source` to `sink` over `m` arcs `tails[i] -> heads[i]`
// with capacities `caps[i]`. The result value is the flow value and the set
// is the source side of the minimal minimum cut.
//
// # Safety
// Arrays must hold `m` elements; `out` must be writable.
enum RfStatus rf_maxflow(size_t nodes,
                         size_t source,
                         size_t sink,
                         size_t m,
                         const size_t *tails,
                         const size_t *heads,
                         const double *caps,
                         int32_t algo,
                         struct RfResult **out);

// # Safety
// `r` must come from a solver call and not be freed yet; null is ignored.
void rf_result_free(struct RfResult *r);

// Objective value; NaN for a null handle.
//
// # Safety
// `r` must be a live result handle or null.
double rf_result_value(const struct RfResult *r);

// # Safety
// `r` must be a live result handle or null.
size_t rf_result_iterations(const struct RfResult *r);

// `true` when the answer is exact or met the requested gap.
//
// # Safety
// `r` must be a live result handle or null.
bool rf_result_certified(const struct RfResult *r);

// Copies up to `cap` set elements into `buf`; returns the set size.
//
// # Safety
// `r` must be a live result handle or null; `buf` writable for `cap`
// elements or null.
size_t rf_result_set(const struct RfResult *r, size_t *buf, size_t cap);

// Copies up to `cap` entries of the continuous point into `buf`; returns
// its length (zero for exact combinatorial answers).
//
// # Safety
// `r` must be a live result handle or null; `buf` writable for `cap`
// elements or null.
size_t rf_result_point(const struct RfResult *r, double *buf, size_t cap);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RATIOFORGE_H */
