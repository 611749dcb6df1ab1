#ifndef VINCULAR_H
#define VINCULAR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Maps accepted by [`vinc_apply`].
typedef enum VincMap {
  VINC_MAP_PHI = 0,
  VINC_MAP_PSI = 1,
  VINC_MAP_MU = 2,
  VINC_MAP_INVERSE = 3,
  VINC_MAP_REVERSE = 4,
  VINC_MAP_COMPLEMENT = 5,
} VincMap;

// Named statistics accepted by [`vinc_statistic`].
typedef enum VincStatistic {
  VINC_STATISTIC_DES = 0,
  VINC_STATISTIC_RLMAX = 1,
  VINC_STATISTIC_RLMIN = 2,
  VINC_STATISTIC_LAST_VALUE_MINUS_ONE = 3,
} VincStatistic;

// Result code of every fallible call.
typedef enum VincStatus {
  VINC_STATUS_OK = 0,
  VINC_STATUS_NULL_POINTER = 1,
  VINC_STATUS_INVALID_UTF8 = 2,
  // Malformed permutation, pattern, class or check name.
  VINC_STATUS_PARSE_ERROR = 3,
  // Input outside a map's domain (contains 132, or empty for `psi`).
  VINC_STATUS_PRECONDITION = 4,
  // `n` above the enumeration ceiling.
  VINC_STATUS_LIMIT_EXCEEDED = 5,
  // A verification found a counterexample.
  VINC_STATUS_CHECK_FAILED = 6,
  VINC_STATUS_INTERNAL = 7,
} VincStatus;

// Opaque vincular pattern handle.
typedef struct VincPattern VincPattern;

// Opaque permutation handle.
typedef struct VincPermutation VincPermutation;

// Description of the most recent failure on this thread, or NULL.
//
// The pointer stays valid until the next failing call on the same thread.
const char *vinc_last_error_message(void);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must be NULL or a pointer obtained from this library and not yet freed.
void vinc_string_free(char *s);

// Parses `425163`, `4,2,5,1,6,3`, `""` or `ε`.
//
// # Safety
// `text` must be a valid NUL-terminated string; `out` must be writable.
enum VincStatus vinc_permutation_parse(const char *text, struct VincPermutation **out);

// Builds a permutation from `len` one-line values.
//
// # Safety
// `values` must point to `len` readable `uint32_t` (may be NULL when `len`
// is 0); `out` must be writable.
enum VincStatus vinc_permutation_from_values(const uint32_t *values,
                                             size_t len,
                                             struct VincPermutation **out);

// Releases a permutation handle. NULL is ignored.
//
// # Safety
// `p` must be NULL or a handle from this library not yet freed.
void vinc_permutation_free(struct VincPermutation *p);

// Length `n`; 0 for NULL.
//
// # Safety
// `p` must be NULL or a live handle.
size_t vinc_permutation_len(const struct VincPermutation *p);

// Copies up to `cap` values into `buf` and returns the full length.
//
// # Safety
// `p` must be a live handle; `buf` must have room for `cap` values (may be
// NULL when `cap` is 0).
size_t vinc_permutation_values(const struct VincPermutation *p, uint32_t *buf, size_t cap);

// Text form (digits for n <= 9, commas otherwise); free with
// [`vinc_string_free`]. NULL on a NULL handle.
//
// # Safety
// `p` must be NULL or a live handle.
char *vinc_permutation_to_string(const struct VincPermutation *p);

// Parses dash notation such as `2-31`, `[2-13` or `1-2]`.
//
// # Safety
// `text` must be a valid NUL-terminated string; `out` must be writable.
enum VincStatus vinc_pattern_parse(const char *text, struct VincPattern **out);

// Releases a pattern handle. NULL is ignored.
//
// # Safety
// `p` must be NULL or a handle from this library not yet freed.
void vinc_pattern_free(struct VincPattern *p);

// Canonical dash notation; free with [`vinc_string_free`].
//
// # Safety
// `p` must be NULL or a live handle.
char *vinc_pattern_to_string(const struct VincPattern *p);

// Number of occurrences of `pattern` in `host`.
//
// # Safety
// Both handles must be live; `out` must be writable.
enum VincStatus vinc_count_occurrences(const struct VincPattern *pattern,
                                       const struct VincPermutation *host,
                                       uint64_t *out);

// Evaluates a named statistic.
//
// # Safety
// `p` must be live; `out` must be writable.
enum VincStatus vinc_statistic(enum VincStatistic kind,
                               const struct VincPermutation *p,
                               uint64_t *out);

// True in `out` iff `p` has no classical occurrence of `pattern`.
//
// # Safety
// Both handles must be live; `out` must be writable.
enum VincStatus vinc_avoids(const struct VincPermutation *p,
                            const struct VincPermutation *pattern,
                            bool *out);

// Applies a map and stores a new handle in `out`. `phi`, `psi` and `mu`
// return `VINC_STATUS_PRECONDITION` on inputs containing 132.
//
// # Safety
// `p` must be live; `out` must be writable.
enum VincStatus vinc_apply(enum VincMap map,
                           const struct VincPermutation *p,
                           struct VincPermutation **out);

// Size of a class (`"all"` or a length-3 pattern such as `"132"`) at `n`.
//
// # Safety
// `class` must be a valid NUL-terminated string; `out` must be writable.
enum VincStatus vinc_class_size(const char *class_, size_t n, uint64_t *out);

// Runs a named check (`theorem1`, ..., `bona`) for every n up to `n_max`.
// Returns `VINC_STATUS_CHECK_FAILED` with the counterexample as the error
// message if one is found.
//
// # Safety
// `name` must be a valid NUL-terminated string.
enum VincStatus vinc_verify(const char *name, size_t n_max);

// Runs the proper-pattern search and stores its JSON report in `out`
// (free with [`vinc_string_free`]).
//
// # Safety
// `out` must be writable.
enum VincStatus vinc_search_json(size_t n_max, bool modulo_symmetry, char **out);

#endif  /* VINCULAR_H */
