#ifndef IDOMLAB_H
#define IDOMLAB_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum IdomlabStatus {
  IDOMLAB_STATUS_OK = 0,
  IDOMLAB_STATUS_NULL_POINTER = 1,
  IDOMLAB_STATUS_INVALID_ARGUMENT = 2,
  IDOMLAB_STATUS_PARSE_ERROR = 3,
  IDOMLAB_STATUS_CAP_EXCEEDED = 4,
  IDOMLAB_STATUS_BUDGET_EXHAUSTED = 5,
  IDOMLAB_STATUS_UNDEFINED = 6,
  IDOMLAB_STATUS_BUFFER_TOO_SMALL = 7,
  IDOMLAB_STATUS_PANIC = 8,
} IdomlabStatus;

/**
 * Opaque graph handle.
 */
typedef struct IdomlabGraph IdomlabGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next call on the same thread.
 */
const char *idomlab_last_error(void);

/**
 * # Safety
 * `code` is a NUL-terminated string and `out` is writable.
 */
enum IdomlabStatus idomlab_graph_from_graph6(const char *code, struct IdomlabGraph **out);

/**
 * `edges` holds `edge_count` pairs as `2 * edge_count` vertex indices.
 *
 * # Safety
 * `edges` points to `2 * edge_count` values (or is null when
 * `edge_count` is 0) and `out` is writable.
 */
enum IdomlabStatus idomlab_graph_from_edges(size_t order,
                                            const size_t *edges,
                                            size_t edge_count,
                                            struct IdomlabGraph **out);

/**
 * Builds a named family such as `cycle:16` or `X:3`.
 *
 * # Safety
 * `spec` is a NUL-terminated string and `out` is writable.
 */
enum IdomlabStatus idomlab_graph_family(const char *spec, struct IdomlabGraph **out);

/**
 * Direct product, vertex `(g, h)` at index `g * order(h) + h`.
 *
 * # Safety
 * `g` and `h` are live handles and `out` is writable.
 */
enum IdomlabStatus idomlab_graph_product(const struct IdomlabGraph *g,
                                         const struct IdomlabGraph *h,
                                         struct IdomlabGraph **out);

/**
 * # Safety
 * `g` is null or a handle not yet freed.
 */
void idomlab_graph_free(struct IdomlabGraph *g);

/**
 * # Safety
 * `g` is null or a live handle. Null gives 0.
 */
size_t idomlab_graph_order(const struct IdomlabGraph *g);

/**
 * # Safety
 * `g` is null or a live handle. Null gives 0.
 */
size_t idomlab_graph_edge_count(const struct IdomlabGraph *g);

/**
 * Writes the graph6 string with its NUL into `buf`. `needed` receives
 * the required size including the NUL, also on `BUFFER_TOO_SMALL`.
 *
 * # Safety
 * `g` is a live handle, `buf` has room for `len` bytes (or is null when
 * `len` is 0), and `needed` is null or writable.
 */
enum IdomlabStatus idomlab_graph_to_graph6(const struct IdomlabGraph *g,
                                           char *buf,
                                           size_t len,
                                           size_t *needed);

/**
 * Exact value of an invariant (`i`, `alpha`, `gamma`, `gamma_t`, `rho`).
 * A `cap` of 0 keeps the default vertex cap. When `witness` is non-null
 * the optimal set is written there in increasing order and
 * `witness_len` receives its size; the buffer must hold `order(g)`
 * entries.
 *
 * # Safety
 * `g` is a live handle, `name` a NUL-terminated string, `value` writable,
 * and `witness`/`witness_len` null or writable as described.
 */
enum IdomlabStatus idomlab_invariant(const struct IdomlabGraph *g,
                                     const char *name,
                                     size_t cap,
                                     size_t *value,
                                     size_t *witness,
                                     size_t *witness_len);

/**
 * Minimum weight of a legal labelling of `g` with clique order `n`,
 * equal to i(G×K_n).
 *
 * # Safety
 * `g` is a live handle and `weight` is writable.
 */
enum IdomlabStatus idomlab_min_labelling_weight(const struct IdomlabGraph *g,
                                                size_t n,
                                                size_t cap,
                                                size_t *weight);

/**
 * Verifies a JSON certificate bundle and counts the verdicts.
 *
 * # Safety
 * `json` is a NUL-terminated string; the three counters are writable.
 */
enum IdomlabStatus idomlab_verify_certificates(const char *json,
                                               size_t cap,
                                               size_t *verified,
                                               size_t *refuted,
                                               size_t *unchecked);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* IDOMLAB_H */
