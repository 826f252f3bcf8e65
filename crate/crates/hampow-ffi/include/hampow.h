#ifndef HAMPOW_H
#define HAMPOW_H

/* Generated with cbindgen:0.29.4 */

/* Generated by cbindgen from hampow-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Outcome of a library call.
 */
typedef enum HpStatus {
  /**
   * Success; out parameters are filled in.
   */
  HP_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  HP_STATUS_NULL_ARGUMENT = 1,
  /**
   * Arguments violate the function's domain (bad edge list, k out of
   * range, and so on).
   */
  HP_STATUS_INVALID_INPUT = 2,
  /**
   * The search budget ran out before the answer was certain.
   */
  HP_STATUS_BUDGET_EXHAUSTED = 3,
  /**
   * The quantity is undefined for this input.
   */
  HP_STATUS_NOT_APPLICABLE = 4,
} HpStatus;

/**
 * Opaque digraph handle.
 */
typedef struct HpDigraph HpDigraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Build a digraph on `n` vertices from `m` arcs given as a flattened
 * array `[u0, v0, u1, v1, ...]` of length `2 * m`.
 *
 * # Safety
 *
 * `edges` must point to `2 * m` readable `size_t` values (it may be null
 * when `m` is zero) and `out` must be a valid writable pointer.
 */
enum HpStatus hp_digraph_build(size_t n, size_t m, const size_t *edges, struct HpDigraph **out);

/**
 * Parse the text edge-list format ("n m" header then one "u v" line per
 * arc, '#' comments allowed).
 *
 * # Safety
 *
 * `text` must be a valid NUL-terminated string and `out` a valid
 * writable pointer.
 */
enum HpStatus hp_digraph_parse(const char *text, struct HpDigraph **out);

/**
 * Release a handle. Null is a no-op.
 *
 * # Safety
 *
 * `g` must be null or a pointer obtained from this library that has not
 * been freed before.
 */
void hp_digraph_free(struct HpDigraph *g);

/**
 * Number of vertices.
 *
 * # Safety
 *
 * `g` must be a live handle and `out` a valid writable pointer.
 */
enum HpStatus hp_digraph_n(const struct HpDigraph *g, size_t *out);

/**
 * Number of arcs.
 *
 * # Safety
 *
 * `g` must be a live handle and `out` a valid writable pointer.
 */
enum HpStatus hp_digraph_m(const struct HpDigraph *g, size_t *out);

/**
 * Half the total imbalance: the number of dipaths in a minimum
 * decomposition into dipaths and dicycles.
 *
 * # Safety
 *
 * `g` must be a live handle and `out` a valid writable pointer.
 */
enum HpStatus hp_p_sharp(const struct HpDigraph *g, uint64_t *out);

/**
 * True when the graph is balanced and connected in the Eulerian sense.
 *
 * # Safety
 *
 * `g` must be a live handle and `out` a valid writable pointer.
 */
enum HpStatus hp_is_eulerian(const struct HpDigraph *g, bool *out);

/**
 * True when every ordered pair of vertices is connected by a dipath.
 *
 * # Safety
 *
 * `g` must be a live handle and `out` a valid writable pointer.
 */
enum HpStatus hp_is_strongly_connected(const struct HpDigraph *g, bool *out);

/**
 * True when the graph has no dicycle.
 *
 * # Safety
 *
 * `g` must be a live handle and `out` a valid writable pointer.
 */
enum HpStatus hp_is_acyclic(const struct HpDigraph *g, bool *out);

/**
 * True when the graph is Eulerian and removing any single dicycle
 * disconnects it. Returns `BudgetExhausted` (with `out` set false) if
 * dicycle enumeration exceeds `cycle_cap` before the answer is known.
 *
 * # Safety
 *
 * `g` must be a live handle and `out` a valid writable pointer.
 */
enum HpStatus hp_is_minimally_eulerian(const struct HpDigraph *g, size_t cycle_cap, bool *out);

/**
 * The k-th power: an arc for every ordered pair at directed distance at
 * most `k`. `k` must be positive.
 *
 * # Safety
 *
 * `g` must be a live handle and `out` a valid writable pointer.
 */
enum HpStatus hp_power(const struct HpDigraph *g, uint32_t k, struct HpDigraph **out);

/**
 * Least k such that the k-th power is Hamiltonian. Returns
 * `NotApplicable` when the exponent is undefined (n < 2 or not strongly
 * connected) and `BudgetExhausted` (with `out_h` set to the certified
 * lower bound) when the solver budget runs out.
 *
 * # Safety
 *
 * `g` must be a live handle and `out_h` a valid writable pointer.
 */
enum HpStatus hp_ham_exponent(const struct HpDigraph *g, uint64_t budget, uint32_t *out_h);

/**
 * Generate the extremal family member for parameter `k >= 4`.
 *
 * # Safety
 *
 * `out` must be a valid writable pointer.
 */
enum HpStatus hp_generate_gk(uint64_t k, struct HpDigraph **out);

/**
 * ceil(sqrt(n) * log2(n)^2 / 2) for 2 <= n <= 2^26.
 *
 * # Safety
 *
 * `out` must be a valid writable pointer.
 */
enum HpStatus hp_f_bound(uint64_t n, uint64_t *out);

/**
 * Render the graph in the text edge-list format. The returned string is
 * owned by the caller and must be released with `hp_string_free`.
 *
 * # Safety
 *
 * `g` must be a live handle and `out` a valid writable pointer.
 */
enum HpStatus hp_format_edge_list(const struct HpDigraph *g, char **out);

/**
 * Release a string returned by this library. Null is a no-op.
 *
 * # Safety
 *
 * `s` must be null or a string obtained from this library that has not
 * been freed before.
 */
void hp_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HAMPOW_H */
