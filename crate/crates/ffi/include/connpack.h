#ifndef CONNPACK_H
#define CONNPACK_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ConnStatus {
  CONN_STATUS_OK = 0,
  CONN_STATUS_NULL_POINTER = 1,
  CONN_STATUS_INVALID_ARGUMENT = 2,
  CONN_STATUS_IO = 3,
  CONN_STATUS_PARSE = 4,
  CONN_STATUS_DISCONNECTED = 5,
  CONN_STATUS_VALIDATION = 6,
  CONN_STATUS_BOUND = 7,
  CONN_STATUS_OUT_OF_RANGE = 8,
  CONN_STATUS_PANIC = 9,
  CONN_STATUS_INTERNAL = 10,
} ConnStatus;

/*
 Opaque graph handle.
 */
typedef struct ConnGraph ConnGraph;

/*
 Opaque weighted tree collection.
 */
typedef struct ConnPacking ConnPacking;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread; empty after a success.
 The pointer stays valid until the next call on the same thread.
 */
const char *connpack_last_error(void);

/*
 Builds a graph on `n` vertices from `m` edges given as `2*m` endpoint ids.

 # Safety
 `edges` must point to `2*m` readable `size_t` values (or be null when `m == 0`);
 `out` must be writable.
 */
enum ConnStatus connpack_graph_from_edges(size_t n,
                                          const size_t *edges,
                                          size_t m,
                                          struct ConnGraph **out);

/*
 Reads an edge-list file.

 # Safety
 `path` must be a NUL-terminated string; `out` must be writable.
 */
enum ConnStatus connpack_graph_load(const char *path, bool remap, struct ConnGraph **out);

/*
 Erdős–Rényi graph, deterministic per seed.

 # Safety
 `out` must be writable.
 */
enum ConnStatus connpack_graph_gnp(size_t n, double p, uint64_t seed, struct ConnGraph **out);

/*
 # Safety
 `g` must come from a `connpack_graph_*` constructor and not be freed twice.
 */
void connpack_graph_free(struct ConnGraph *g);

/*
 # Safety
 `g` must be a live graph handle and `n`, `m` writable.
 */
enum ConnStatus connpack_graph_size(const struct ConnGraph *g, size_t *n, size_t *m);

/*
 # Safety
 `g` must be a live graph handle and `out` writable.
 */
enum ConnStatus connpack_vertex_connectivity(const struct ConnGraph *g, size_t *out);

/*
 # Safety
 `g` must be a live graph handle and `out` writable.
 */
enum ConnStatus connpack_edge_connectivity(const struct ConnGraph *g, size_t *out);

/*
 Fractional dominating-tree packing (centralized). `classes` receives the class count.

 # Safety
 `g` must be a live graph handle; `out` and `classes` writable.
 */
enum ConnStatus connpack_cds_pack(const struct ConnGraph *g,
                                  size_t k_guess,
                                  uint64_t seed,
                                  struct ConnPacking **out,
                                  size_t *classes);

/*
 Fractional spanning-tree packing with accuracy `epsilon`.

 # Safety
 `g` must be a live graph handle; `out` writable.
 */
enum ConnStatus connpack_st_pack(const struct ConnGraph *g,
                                 double epsilon,
                                 uint64_t seed,
                                 struct ConnPacking **out);

/*
 # Safety
 `p` must come from a packing constructor and not be freed twice.
 */
void connpack_packing_free(struct ConnPacking *p);

/*
 # Safety
 `p` must be a live packing handle; outputs writable.
 */
enum ConnStatus connpack_packing_summary(const struct ConnPacking *p,
                                         size_t *trees,
                                         double *total_weight);

/*
 Copies tree `index`'s edges into `buf` as `2*edges` endpoint ids. Call with
 `buf == NULL` to learn `edges` first; `capacity` counts edges.

 # Safety
 `p` must be a live packing handle; `buf` must hold `2*capacity` values when non-null.
 */
enum ConnStatus connpack_packing_tree(const struct ConnPacking *p,
                                      size_t index,
                                      double *weight,
                                      size_t *edges,
                                      size_t *buf,
                                      size_t capacity);

/*
 Checks `p` against `g`: as dominating trees with per-vertex load when
 `dominating`, otherwise as spanning trees with per-edge load.

 # Safety
 Handles must be live; outputs writable.
 */
enum ConnStatus connpack_packing_verify(const struct ConnGraph *g,
                                        const struct ConnPacking *p,
                                        bool dominating,
                                        bool *valid,
                                        double *max_load);

/*
 JSON text of the packing, freed with `connpack_string_free`.

 # Safety
 `p` must be a live packing handle; `out` writable.
 */
enum ConnStatus connpack_packing_to_json(const struct ConnPacking *p, char **out);

/*
 # Safety
 `s` must come from `connpack_packing_to_json` and not be freed twice.
 */
void connpack_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CONNPACK_H */
