/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef WREATHGEN_H
#define WREATHGEN_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum WgStatus {
  WG_STATUS_OK = 0,
  WG_STATUS_NULL_POINTER = 1,
  WG_STATUS_INVALID_UTF8 = 2,
  WG_STATUS_PARSE = 3,
  WG_STATUS_DEGREE_MISMATCH = 4,
  WG_STATUS_INVALID_ARGUMENT = 5,
  WG_STATUS_EXCLUDED = 6,
  WG_STATUS_BUFFER_TOO_SMALL = 7,
  WG_STATUS_OVERFLOW = 8,
  WG_STATUS_PANIC = 9,
} WgStatus;

/**
 * A base and strong generating set.
 */
typedef struct WgBsgs WgBsgs;

/**
 * A generating set of a wreath product.
 */
typedef struct WgGeneratingSet WgGeneratingSet;

/**
 * A permutation.
 */
typedef struct WgPermutation WgPermutation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message of the last failing call on this thread, or NULL. The pointer
 * stays valid until the next failing call on this thread.
 */
const char *wg_last_error(void);

/**
 * Parses cycle notation such as `(1,2,3)(4,5)` at the given degree.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum WgStatus wg_perm_parse(const char *text, size_t degree, struct WgPermutation **out);

/**
 * Builds a permutation from its 1-based image list `images[0..degree]`.
 *
 * # Safety
 * `images` must point to `degree` readable values and `out` be valid.
 */
enum WgStatus wg_perm_from_images(const uint32_t *images,
                                  size_t degree,
                                  struct WgPermutation **out);

/**
 * `a` followed by `b`.
 *
 * # Safety
 * All pointers must be valid; `a` and `b` must be live handles.
 */
enum WgStatus wg_perm_compose(const struct WgPermutation *a,
                              const struct WgPermutation *b,
                              struct WgPermutation **out);

/**
 * # Safety
 * `a` must be a live handle and `out` valid.
 */
enum WgStatus wg_perm_inverse(const struct WgPermutation *a, struct WgPermutation **out);

/**
 * Degree of `a`, or 0 for NULL.
 *
 * # Safety
 * `a` must be NULL or a live handle.
 */
size_t wg_perm_degree(const struct WgPermutation *a);

/**
 * Image of the 1-based `point`, or 0 when `a` is NULL or `point` is out of range.
 *
 * # Safety
 * `a` must be NULL or a live handle.
 */
size_t wg_perm_image(const struct WgPermutation *a, size_t point);

/**
 * Element order; fails with `Overflow` if it does not fit in 64 bits.
 *
 * # Safety
 * `a` must be a live handle and `out` valid.
 */
enum WgStatus wg_perm_order(const struct WgPermutation *a, uint64_t *out);

/**
 * Canonical cycle notation of `a`.
 *
 * # Safety
 * `a` must be a live handle; `buf` must hold `len` bytes; `needed` may be NULL.
 */
enum WgStatus wg_perm_to_string(const struct WgPermutation *a,
                                char *buf,
                                size_t len,
                                size_t *needed);

/**
 * # Safety
 * `a` must be NULL or a handle not yet freed.
 */
void wg_perm_free(struct WgPermutation *a);

/**
 * Runs Schreier-Sims on `count` generators of the given degree.
 *
 * # Safety
 * `gens` must point to `count` live handles (it may be NULL when `count` is 0).
 */
enum WgStatus wg_bsgs_new(const struct WgPermutation *const *gens,
                          size_t count,
                          size_t degree,
                          struct WgBsgs **out);

/**
 * Group order in decimal.
 *
 * # Safety
 * `b` must be a live handle; `buf` must hold `len` bytes; `needed` may be NULL.
 */
enum WgStatus wg_bsgs_order(const struct WgBsgs *b, char *buf, size_t len, size_t *needed);

/**
 * Membership test.
 *
 * # Safety
 * `b` and `a` must be live handles and `out` valid.
 */
enum WgStatus wg_bsgs_contains(const struct WgBsgs *b, const struct WgPermutation *a, bool *out);

/**
 * The base and strong generators as JSON.
 *
 * # Safety
 * `b` must be a live handle; `buf` must hold `len` bytes; `needed` may be NULL.
 */
enum WgStatus wg_bsgs_to_json(const struct WgBsgs *b, char *buf, size_t len, size_t *needed);

/**
 * # Safety
 * `b` must be NULL or a handle not yet freed.
 */
void wg_bsgs_free(struct WgBsgs *b);

/**
 * A minimal generating set of `base wr top`, each given as `S:n` or `A:n`.
 *
 * # Safety
 * `base` and `top` must be NUL-terminated strings and `out` valid.
 */
enum WgStatus wg_gens_new(const char *base, const char *top, struct WgGeneratingSet **out);

/**
 * Number of elements in the set (1 or 2), or 0 for NULL.
 *
 * # Safety
 * `set` must be NULL or a live handle.
 */
size_t wg_gens_len(const struct WgGeneratingSet *set);

/**
 * Element `index` (0-based) in the imprimitive action of degree `m n`.
 *
 * # Safety
 * `set` must be a live handle and `out` valid.
 */
enum WgStatus wg_gens_embedded(const struct WgGeneratingSet *set,
                               size_t index,
                               struct WgPermutation **out);

/**
 * Whether the set generates a group of order `|G|^n |S|`.
 *
 * # Safety
 * `set` must be a live handle and `out` valid.
 */
enum WgStatus wg_gens_verify(const struct WgGeneratingSet *set, bool *out);

/**
 * Provenance tag of the construction, e.g. `special-pair`.
 *
 * # Safety
 * `set` must be a live handle; `buf` must hold `len` bytes; `needed` may be NULL.
 */
enum WgStatus wg_gens_provenance(const struct WgGeneratingSet *set,
                                 char *buf,
                                 size_t len,
                                 size_t *needed);

/**
 * # Safety
 * `set` must be NULL or a handle not yet freed.
 */
void wg_gens_free(struct WgGeneratingSet *set);

/**
 * Checks a classical generating set by its case id (for example `L2.5-1`)
 * at degree `n`. Excluded degrees give [`WgStatus::Excluded`].
 *
 * # Safety
 * `case_id` must be a NUL-terminated string and `matches` valid.
 */
enum WgStatus wg_verify_lemma(const char *case_id, size_t n, bool *matches);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WREATHGEN_H */
