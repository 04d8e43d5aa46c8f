/* C interface to the non-resultant system topology library. */

#ifndef NONRES_FFI_H
#define NONRES_FFI_H

#pragma once

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Outcome of an interface call.
 */
typedef enum NrtStatus {
  /**
   * The call succeeded.
   */
  NRT_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  NRT_STATUS_NULL_POINTER = 1,
  /**
   * Arguments were rejected; see `nrt_last_error`.
   */
  NRT_STATUS_INVALID_INPUT = 2,
  /**
   * The requested space is empty (a lone complex form, or a lone real
   * form of odd degree, always has a root).
   */
  NRT_STATUS_EMPTY_COMPLEMENT = 3,
} NrtStatus;

/**
 * Opaque degree profile handle.
 */
typedef struct NrtProfile NrtProfile;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread, or null.
 * The caller owns the returned string.
 */
char *nrt_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must have been returned by a function of this library and not yet
 * freed.
 */
void nrt_string_free(char *s);

/**
 * Builds a profile from `len` degrees. On success writes a handle to
 * `out`; release it with [`nrt_profile_free`].
 *
 * # Safety
 * `degrees` must point to `len` readable values and `out` must be a valid
 * destination pointer.
 */
enum NrtStatus nrt_profile_new(const int64_t *degrees, size_t len, struct NrtProfile **out);

/**
 * # Safety
 * `profile` must come from [`nrt_profile_new`] and not be freed twice.
 */
void nrt_profile_free(struct NrtProfile *profile);

/**
 * Dimension of the coefficient space `D = sum (d_i + 1)`.
 *
 * # Safety
 * Both pointers must be valid.
 */
enum NrtStatus nrt_profile_total_dim(const struct NrtProfile *profile, uint32_t *out);

/**
 * Reduced integer cohomology of the real complement, as JSON.
 *
 * # Safety
 * `profile` must be a live handle and `out` a valid destination.
 */
enum NrtStatus nrt_real_json(const struct NrtProfile *profile, char **out);

/**
 * Reduced rational cohomology of the complex complement, as JSON.
 * Fails with `EmptyComplement` for a single form.
 *
 * # Safety
 * `profile` must be a live handle and `out` a valid destination.
 */
enum NrtStatus nrt_complex_json(const struct NrtProfile *profile, char **out);

/**
 * Rational cohomology of the complement of the m-discriminant, as JSON.
 *
 * # Safety
 * `out` must be a valid destination.
 */
enum NrtStatus nrt_mdisc_json(int64_t d, int64_t m, char **out);

/**
 * A page of the resolution spectral sequence, as JSON. `complex_field`
 * selects the complex tabulation, `final_leaf` the surviving page.
 *
 * # Safety
 * `profile` must be a live handle and `out` a valid destination.
 */
enum NrtStatus nrt_page_json(const struct NrtProfile *profile,
                             bool complex_field,
                             bool final_leaf,
                             char **out);

/**
 * Runs the sampling census and returns the report as JSON; `verified`
 * receives the verdict. An empty complement yields the empty report with
 * `verified = true`.
 *
 * # Safety
 * `profile`, `verified` and `out` must be valid pointers.
 */
enum NrtStatus nrt_verify_json(const struct NrtProfile *profile,
                               uint64_t samples,
                               uint32_t bound,
                               uint64_t seed,
                               bool *verified,
                               char **out);

/**
 * Constructs the witness system with winding index `index` for degrees
 * `(d1, d2)` and returns it as JSON, winding re-check included.
 *
 * # Safety
 * `out` must be a valid destination.
 */
enum NrtStatus nrt_witness_json(uint32_t d1, uint32_t d2, int64_t index, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NONRES_FFI_H */
