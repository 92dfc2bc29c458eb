#ifndef INVWEYL_H
#define INVWEYL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible function.
typedef enum InvweylStatus {
  INVWEYL_STATUS_OK = 0,
  INVWEYL_STATUS_NULL_POINTER = 1,
  INVWEYL_STATUS_INVALID_UTF8 = 2,
  INVWEYL_STATUS_INVALID_ARGUMENT = 3,
  INVWEYL_STATUS_COMPUTATION_FAILED = 4,
  INVWEYL_STATUS_PANIC = 5,
} InvweylStatus;

// An owned result: a list of polynomials with its JSON form.
typedef struct InvweylBasis InvweylBasis;

// Computes B^ann for a group spec such as "S3", "G(2,1,2)", "C4" or "D5".
//
// # Safety
// `group` must be a valid NUL-terminated string and `out` valid for a
// pointer write. On success `*out` owns a handle to release with
// [`invweyl_basis_free`]; on failure it is set to null.
enum InvweylStatus invweyl_bann_new(const char *group, struct InvweylBasis **out);

// Computes the canonical basis of B^ann(Sₙ), 1 ≤ n ≤ 8.
//
// # Safety
// `out` must be valid for a pointer write; ownership as for
// [`invweyl_bann_new`].
enum InvweylStatus invweyl_canonical_basis_new(size_t n, struct InvweylBasis **out);

// Computes the Specht polynomial Π (x_k^d − x_l^d) of a set partition
// written as "{1,2},{3}".
//
// # Safety
// `blocks` must be a valid NUL-terminated string and `out` valid for a
// pointer write; ownership as for [`invweyl_bann_new`].
enum InvweylStatus invweyl_specht_new(const char *blocks, uint32_t d, struct InvweylBasis **out);

// Writes the number of polynomials held by `basis` to `*len`.
//
// # Safety
// `basis` must be null or a live handle; `len` must be null or valid for
// a write.
enum InvweylStatus invweyl_basis_len(const struct InvweylBasis *basis, size_t *len);

// Renders `basis` as compact JSON into a new string owned by the caller,
// to release with [`invweyl_string_free`].
//
// # Safety
// `basis` must be null or a live handle; `out` must be null or valid for a
// pointer write.
enum InvweylStatus invweyl_basis_to_json(const struct InvweylBasis *basis, char **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a pointer obtained from [`invweyl_basis_to_json`]
// that has not been freed.
void invweyl_string_free(char *s);

// Releases a handle. Null is ignored.
//
// # Safety
// `basis` must be null or a handle from this library that has not been
// freed.
void invweyl_basis_free(struct InvweylBasis *basis);

// The message of the last failed call on this thread, or null. The
// pointer stays valid until the next call into this library on the same
// thread.
const char *invweyl_last_error_message(void);

// The library version as a static NUL-terminated string.
const char *invweyl_version(void);

#endif  /* INVWEYL_H */
