#ifndef FIG8_SPLITTINGS_H
#define FIG8_SPLITTINGS_H

/* Generated by cbindgen from crates/ffi. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Surface indices: 0 = K(0,1), 1 = K(4,1), 2 = K(4,-1).
 */
#define FIG8_SURFACE_K01 0

#define FIG8_SURFACE_K41 1

#define FIG8_SURFACE_K4M1 2

/**
 * Result codes. The non-zero input codes match the `fig8` CLI exit codes.
 */
typedef enum Fig8Status {
  FIG8_STATUS_OK = 0,
  FIG8_STATUS_INVALID_SLOPE = 2,
  FIG8_STATUS_EXCEPTIONAL_FILLING = 3,
  FIG8_STATUS_ODD_FILLING = 4,
  FIG8_STATUS_INCONSISTENT = 5,
  FIG8_STATUS_NULL_POINTER = 6,
  FIG8_STATUS_OVERFLOW = 7,
  FIG8_STATUS_INVALID_ARGUMENT = 8,
  FIG8_STATUS_PANIC = 9,
} Fig8Status;

/**
 * Ratio band of `p/q`.
 */
typedef enum Fig8Band {
  /**
   * p/q < -3/2
   */
  FIG8_BAND_NEG_OUTER = 0,
  /**
   * -3/2 < p/q < -1/2
   */
  FIG8_BAND_NEG_INNER = 1,
  /**
   * -1/2 < p/q < 1/2
   */
  FIG8_BAND_MID = 2,
  /**
   * 1/2 < p/q < 3/2
   */
  FIG8_BAND_POS_INNER = 3,
  /**
   * 3/2 < p/q
   */
  FIG8_BAND_POS_OUTER = 4,
} Fig8Band;

/**
 * Opaque classification handle.
 */
typedef struct Fig8Classification Fig8Classification;

/**
 * One closed candidate surface.
 */
typedef struct Fig8Candidate {
  int64_t torus_x;
  int64_t torus_y;
  uint32_t bands;
  uint32_t genus;
  bool minimal;
} Fig8Candidate;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Classifies `M(two_p, q)` and stores a new handle in `*out`.
 *
 * # Safety
 * `out` must be null or valid for writing one pointer.
 */
enum Fig8Status fig8_classify(int64_t two_p, int64_t q, struct Fig8Classification **out);

/**
 * Releases a handle from [`fig8_classify`]. Null is ignored.
 *
 * # Safety
 * `handle` must be null or a handle not yet freed.
 */
void fig8_classification_free(struct Fig8Classification *handle);

/**
 * Normalised filling `(2p, q)` with `2p > 0`.
 *
 * # Safety
 * `handle` must be a live handle; out pointers must be null or writable.
 */
enum Fig8Status fig8_classification_filling(const struct Fig8Classification *handle,
                                            int64_t *two_p,
                                            int64_t *q);

/**
 * # Safety
 * `handle` must be a live handle; `out` must be null or writable.
 */
enum Fig8Status fig8_classification_band(const struct Fig8Classification *handle,
                                         enum Fig8Band *out);

/**
 * Index of the unique geometrically incompressible splitting surface.
 *
 * # Safety
 * `handle` must be a live handle; `out` must be null or writable.
 */
enum Fig8Status fig8_classification_unique_surface(const struct Fig8Classification *handle,
                                                   uint32_t *out);

/**
 * # Safety
 * `handle` must be a live handle; `out` must be null or writable.
 */
enum Fig8Status fig8_classification_candidate(const struct Fig8Classification *handle,
                                              uint32_t surface,
                                              struct Fig8Candidate *out);

/**
 * Whether `from` compresses to `to` in this filling.
 *
 * # Safety
 * `handle` must be a live handle; `out` must be null or writable.
 */
enum Fig8Status fig8_classification_compresses(const struct Fig8Classification *handle,
                                               uint32_t from,
                                               uint32_t to,
                                               bool *out);

/**
 * Full JSON report, as printed by `fig8 classify --json`. Free the string
 * with [`fig8_string_free`].
 *
 * # Safety
 * `handle` must be a live handle; `out` must be null or writable.
 */
enum Fig8Status fig8_classification_to_json(const struct Fig8Classification *handle, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void fig8_string_free(char *s);

/**
 * Minimal-norm frame coefficients `(a, b)` with `q*b - 2p*a = 1`.
 *
 * # Safety
 * `a` and `b` must be null or writable.
 */
enum Fig8Status fig8_frame_for(int64_t two_p, int64_t q, int64_t *a, int64_t *b);

/**
 * Möbius bands of the incompressible surface in a solid torus bounded by
 * the even slope `x/y`.
 *
 * # Safety
 * `out` must be null or writable.
 */
enum Fig8Status fig8_moebius_count(int64_t x, int64_t y, uint32_t *out);

/**
 * Signed intersection of the canonical forms of two slopes.
 *
 * # Safety
 * `out` must be null or writable.
 */
enum Fig8Status fig8_intersection(int64_t x1, int64_t y1, int64_t x2, int64_t y2, int64_t *out);

/**
 * Static description of a status code; never null, never freed.
 */
const char *fig8_status_message(enum Fig8Status status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FIG8_SPLITTINGS_H */
