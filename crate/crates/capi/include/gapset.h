/* C interface to the gapset library. Generated by cbindgen; do not edit. */

#ifndef GAPSET_H
#define GAPSET_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Sentinel representing an infinite value in `uint64_t` results.
 */
#define GS_INF UINT64_MAX

/**
 * Result of a fallible call.
 */
typedef enum GsStatus {
  /**
   * Success.
   */
  GS_STATUS_OK = 0,
  /**
   * A pointer, length, or value argument was unusable.
   */
  GS_STATUS_INVALID_INPUT = 1,
  /**
   * A configured resource bound was exceeded.
   */
  GS_STATUS_RESOURCE_LIMIT = 2,
  /**
   * An operating-system I/O failure.
   */
  GS_STATUS_IO_ERROR = 3,
  /**
   * An internal invariant failed; report as a bug.
   */
  GS_STATUS_INTERNAL_ERROR = 4,
} GsStatus;

/**
 * Gapset counts by multiplicity and genus.
 */
typedef struct GsCountTable GsCountTable;

/**
 * A head set: one least member per residue class modulo the multiplicity.
 */
typedef struct GsHeadSet GsHeadSet;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Computes the standard basis of the monoid generated by
 * `generators[0..len]` and stores a new handle in `*out`.
 *
 * Fails with invalid input when the list is empty, all zero, or null.
 */
enum GsStatus gs_std_basis(const uint64_t *generators, size_t len, struct GsHeadSet **out);

/**
 * Releases a head set handle. Null is ignored.
 */
void gs_headset_free(struct GsHeadSet *h);

/**
 * The multiplicity (modulus) of the head set, or 0 for null.
 */
uint64_t gs_headset_modulus(const struct GsHeadSet *h);

/**
 * Copies all heads into `buf[0..buf_len]`, one per residue class; empty
 * classes are written as [`GS_INF`]. `buf_len` must be at least the
 * modulus.
 */
enum GsStatus gs_headset_heads(const struct GsHeadSet *h, uint64_t *buf, size_t buf_len);

/**
 * True when `value` belongs to the monoid. Null yields false.
 */
bool gs_headset_contains(const struct GsHeadSet *h, uint64_t value);

/**
 * Stores the number of gaps in `*out`, or [`GS_INF`] when the gapset is
 * infinite (gcd above 1).
 */
enum GsStatus gs_genus(const struct GsHeadSet *h, uint64_t *out);

/**
 * Stores the Frobenius number (largest gap, or −1 when there are no gaps)
 * in `*out`. Fails with invalid input when the gapset is infinite.
 */
enum GsStatus gs_frobenius(const struct GsHeadSet *h, int64_t *out);

/**
 * Two-call retrieval of the pseudo-Frobenius elements (finite gapsets
 * only). With a null `buf`, stores the element count in `*written` and
 * returns OK; otherwise copies up to `buf_len` elements and fails if the
 * buffer is too small (the required count is still stored).
 */
enum GsStatus gs_pseudo_frobenius(const struct GsHeadSet *h,
                                  uint64_t *buf,
                                  size_t buf_len,
                                  size_t *written);

/**
 * Decides whether `gaps[0..len]` is the gapset of a numerical semigroup
 * and stores the verdict in `*out`. An empty list is the empty gapset and
 * accepted; any zero in the list is invalid input.
 */
enum GsStatus gs_is_gapset(const uint64_t *gaps, size_t len, bool *out);

/**
 * Counts gapsets by multiplicity and genus for every genus up to `g_max`
 * and stores a new table handle in `*out`. `workers` 0 uses the shared
 * thread pool; `node_cap` 0 uses the default frontier bound.
 */
enum GsStatus gs_count_table(uint64_t g_max,
                             size_t workers,
                             uint64_t node_cap,
                             struct GsCountTable **out);

/**
 * Releases a count table handle. Null is ignored.
 */
void gs_count_table_free(struct GsCountTable *t);

/**
 * The largest genus covered by the table, or 0 for null.
 */
uint64_t gs_count_g_max(const struct GsCountTable *t);

/**
 * Stores the total number of gapsets of genus `g` in `*out`. Fails when
 * `g` exceeds the table's range.
 */
enum GsStatus gs_count_total(const struct GsCountTable *t, uint64_t g, uint64_t *out);

/**
 * Stores the number of gapsets with multiplicity `m` and genus `g` in
 * `*out` (0 for levels that hold no gapset). Fails when `g` exceeds the
 * table's range.
 */
enum GsStatus gs_count_mg(const struct GsCountTable *t, uint64_t m, uint64_t g, uint64_t *out);

/**
 * A static, null-terminated description of a status code.
 */
const char *gs_status_message(enum GsStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GAPSET_H */
