#ifndef LIESTAB_H
#define LIESTAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LiestabStatus {
  LIESTAB_STATUS_OK = 0,
  LIESTAB_STATUS_NULL_POINTER = 1,
  LIESTAB_STATUS_INVALID_ARGUMENT = 2,
  LIESTAB_STATUS_INVALID_FLAG = 3,
  LIESTAB_STATUS_NON_ISOTROPIC_FLAG = 4,
  /**
   * Sampling could not settle the answer; retry with more trials or another seed.
   */
  LIESTAB_STATUS_UNDECIDED = 5,
  LIESTAB_STATUS_COMPUTATION_FAILED = 6,
  LIESTAB_STATUS_PANIC = 7,
} LiestabStatus;

/**
 * Values accepted for the `family` parameters.
 */
typedef enum LiestabFamily {
  /**
   * Flag and generic alternating form stabilizer in gl(V).
   */
  LIESTAB_FAMILY_RV = 0,
  /**
   * Isotropic flag stabilizer in so(q).
   */
  LIESTAB_FAMILY_PV = 1,
  /**
   * Flag parabolic of gl(V).
   */
  LIESTAB_FAMILY_GL = 2,
} LiestabFamily;

/**
 * Opaque algebra handle.
 */
typedef struct LiestabAlgebra LiestabAlgebra;

typedef struct LiestabSampling {
  uint64_t seed;
  size_t trials;
  uint64_t coeff_bound;
} LiestabSampling;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The default sampling parameters (fixed seed, 5 trials, coefficients in [-100, 100]).
 */
struct LiestabSampling liestab_sampling_default(void);

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next library call on the same thread; do not free.
 */
const char *liestab_last_error(void);

/**
 * Builds the algebra of `family` for the flag `dims[0..len]`.
 *
 * `q` is the ambient dimension for pv; for rv and gl pass 0 or the last flag
 * dimension.
 *
 * # Safety
 * `dims` points to `len` readable values and `out` to writable storage.
 */
enum LiestabStatus liestab_algebra_new(uint32_t family,
                                       size_t q,
                                       const size_t *dims,
                                       size_t len,
                                       struct LiestabAlgebra **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `a` is null or came from [`liestab_algebra_new`] and was not freed before.
 */
void liestab_algebra_free(struct LiestabAlgebra *a);

/**
 * # Safety
 * `a` is a live handle and `out` is writable.
 */
enum LiestabStatus liestab_algebra_dim(const struct LiestabAlgebra *a, size_t *out);

/**
 * Index of the algebra. `sampling` may be null for the defaults.
 *
 * # Safety
 * `a` is a live handle, `sampling` is null or valid, `out` is writable.
 */
enum LiestabStatus liestab_index(const struct LiestabAlgebra *a,
                                 const struct LiestabSampling *sampling,
                                 size_t *out);

/**
 * Cartan–Duflo rank of the algebra.
 *
 * # Safety
 * As for [`liestab_index`].
 */
enum LiestabStatus liestab_rank(const struct LiestabAlgebra *a,
                                const struct LiestabSampling *sampling,
                                size_t *out);

/**
 * # Safety
 * As for [`liestab_index`].
 */
enum LiestabStatus liestab_is_quasi_reductive(const struct LiestabAlgebra *a,
                                              const struct LiestabSampling *sampling,
                                              bool *out);

/**
 * Writes whether the algebra has a stable form; `Undecided` if sampling could not tell.
 *
 * # Safety
 * As for [`liestab_index`].
 */
enum LiestabStatus liestab_is_stable(const struct LiestabAlgebra *a,
                                     const struct LiestabSampling *sampling,
                                     bool *out);

/**
 * Runs a sweep and writes its JSON report to `*out_json` (free with
 * [`liestab_string_free`]). `family` is 0 (rv) or 1 (pv); `checks` is a
 * comma list such as `"index,rank"`, `"all"`, or null for the default set.
 *
 * # Safety
 * `checks` is null or a NUL-terminated string, `sampling` is null or valid,
 * `out_json` is writable.
 */
enum LiestabStatus liestab_sweep_json(uint32_t family,
                                      size_t max_ambient,
                                      const char *checks,
                                      const struct LiestabSampling *sampling,
                                      char **out_json);

/**
 * Releases a string returned by the library; null is ignored.
 *
 * # Safety
 * `s` is null or came from this library and was not freed before.
 */
void liestab_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LIESTAB_H */
