#ifndef RADMAX_H
#define RADMAX_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Eccentricity value reported for disconnected graphs.
 */
#define RADMAX_INFINITE UINT32_MAX

typedef enum RadmaxStatus {
  RADMAX_STATUS_OK = 0,
  RADMAX_STATUS_NULL_POINTER = 1,
  RADMAX_STATUS_INVALID_UTF8 = 2,
  RADMAX_STATUS_PARSE_ERROR = 3,
  RADMAX_STATUS_VERTEX_OUT_OF_RANGE = 4,
  RADMAX_STATUS_INVALID_EDGE = 5,
  RADMAX_STATUS_DISCONNECTED = 6,
  RADMAX_STATUS_INFEASIBLE = 7,
  RADMAX_STATUS_UNSUPPORTED_ORDER = 8,
  RADMAX_STATUS_ORDER_OUT_OF_RANGE = 9,
  RADMAX_STATUS_NOT_RADIALLY_MAXIMAL = 10,
  RADMAX_STATUS_SEARCH_ERROR = 11,
  RADMAX_STATUS_INTERNAL = 12,
} RadmaxStatus;

/**
 * Opaque graph handle.
 */
typedef struct RadmaxGraph RadmaxGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until
 * the next failing call on the same thread.
 */
const char *radmax_last_error_message(void);

const char *radmax_version(void);

/**
 * Parses graph6, DOT or an edge list (auto-detected).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum RadmaxStatus radmax_graph_parse(const char *text, struct RadmaxGraph **out);

/**
 * Builds a radially maximal graph of radius `r`, diameter `d`, order `n`.
 *
 * # Safety
 * `out` must be writable.
 */
enum RadmaxStatus radmax_construct(uint32_t r, uint32_t d, size_t n, struct RadmaxGraph **out);

/**
 * # Safety
 * `g` must come from this library and not be used afterwards. NULL is a no-op.
 */
void radmax_graph_free(struct RadmaxGraph *g);

/**
 * # Safety
 * `s` must come from this library. NULL is a no-op.
 */
void radmax_string_free(char *s);

/**
 * Order of `g`, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t radmax_graph_order(const struct RadmaxGraph *g);

/**
 * Edge count of `g`, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t radmax_graph_size(const struct RadmaxGraph *g);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum RadmaxStatus radmax_graph_has_edge(const struct RadmaxGraph *g, size_t u, size_t v, bool *out);

/**
 * New handle holding `g + uv`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum RadmaxStatus radmax_graph_add_edge(const struct RadmaxGraph *g,
                                        size_t u,
                                        size_t v,
                                        struct RadmaxGraph **out);

/**
 * New handle holding the extension of `g` at `v` (a new vertex joined to
 * `v` and all of its neighbours).
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum RadmaxStatus radmax_graph_extend(const struct RadmaxGraph *g,
                                      size_t v,
                                      struct RadmaxGraph **out);

/**
 * graph6 text (no trailing newline).
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum RadmaxStatus radmax_graph_to_graph6(const struct RadmaxGraph *g, char **out);

/**
 * DOT text, with construction labels when the handle came from
 * `radmax_construct`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum RadmaxStatus radmax_graph_to_dot(const struct RadmaxGraph *g, char **out);

/**
 * Construction label of vertex `v` (e.g. `x3`, `y1`, `x4'2`).
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum RadmaxStatus radmax_graph_label(const struct RadmaxGraph *g, size_t v, char **out);

/**
 * Eccentricity of `v`; `RADMAX_INFINITE` when `g` is disconnected.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum RadmaxStatus radmax_eccentricity(const struct RadmaxGraph *g, size_t v, uint32_t *out);

/**
 * Radius and diameter; `RADMAX_INFINITE` for both when disconnected.
 *
 * # Safety
 * `g` must be a live handle; both outputs must be writable.
 */
enum RadmaxStatus radmax_radius_diameter(const struct RadmaxGraph *g,
                                         uint32_t *radius,
                                         uint32_t *diameter);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum RadmaxStatus radmax_is_radially_maximal(const struct RadmaxGraph *g, bool *out);

/**
 * Maximality certificate as JSON; `NotRadiallyMaximal` if none exists.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum RadmaxStatus radmax_certificate_json(const struct RadmaxGraph *g, char **out);

/**
 * Exhaustive search report as JSON. `radius == 0` checks the diameter
 * bound at `order`; otherwise counts non-self-centered radially maximal
 * graphs of that radius at orders `1..=order`.
 *
 * # Safety
 * `out` must be writable.
 */
enum RadmaxStatus radmax_search_json(size_t order,
                                     uint32_t radius,
                                     uint64_t shard_count,
                                     uint64_t shard_index,
                                     char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RADMAX_H */
