#ifndef AWDAHA_H
#define AWDAHA_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Which algebra an element lives in.
typedef enum AwdahaAlgebra {
  // The universal Askey-Wilson algebra.
  AWDAHA_ALGEBRA_DELTA = 0,
  // The universal DAHA of type (C1v, C1).
  AWDAHA_ALGEBRA_HHAT = 1,
} AwdahaAlgebra;

// Braid group generators.
typedef enum AwdahaBraid {
  AWDAHA_BRAID_RHO = 0,
  AWDAHA_BRAID_SIGMA = 1,
  AWDAHA_BRAID_TAU = 2,
} AwdahaBraid;

// Result codes. `AWDAHA_STATUS_OK` is zero; everything else is a failure.
typedef enum AwdahaStatus {
  AWDAHA_STATUS_OK = 0,
  AWDAHA_STATUS_NULL_POINTER = 1,
  AWDAHA_STATUS_INVALID_UTF8 = 2,
  AWDAHA_STATUS_INVALID_ARGUMENT = 3,
  AWDAHA_STATUS_PARSE = 4,
  AWDAHA_STATUS_UNKNOWN_NAME = 5,
  AWDAHA_STATUS_ALPHABET_MISMATCH = 6,
  AWDAHA_STATUS_DIVISION_BY_ZERO = 7,
  AWDAHA_STATUS_NON_TERMINATION = 8,
  AWDAHA_STATUS_NOT_IN_T = 9,
  AWDAHA_STATUS_AXIS_ERROR = 10,
  AWDAHA_STATUS_MISSING_IMAGE = 11,
  AWDAHA_STATUS_SPEC_FORMAT = 12,
  AWDAHA_STATUS_VERIFICATION_FAILED = 13,
  AWDAHA_STATUS_PANIC = 14,
} AwdahaStatus;

// Opaque element handle.
typedef struct AwdahaPoly AwdahaPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the most recent failure on this thread, or NULL. The
// pointer stays valid until the next call into the library on this thread.
const char *awdaha_last_error(void);

// Library version as a static NUL-terminated string.
const char *awdaha_version(void);

// Parses `text` in the naming scope of `alg` without normalizing.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum AwdahaStatus awdaha_parse(enum AwdahaAlgebra alg, const char *text, struct AwdahaPoly **out);

// Releases a handle. NULL is ignored.
//
// # Safety
// `p` must come from this library and not be used afterwards.
void awdaha_poly_free(struct AwdahaPoly *p);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void awdaha_string_free(char *s);

// Normal form of `p`.
//
// # Safety
// `p` must be a live handle and `out` a valid pointer.
enum AwdahaStatus awdaha_normalize(const struct AwdahaPoly *p, struct AwdahaPoly **out);

// Normal form of `a * b`.
//
// # Safety
// `a`, `b` must be live handles and `out` a valid pointer.
enum AwdahaStatus awdaha_mul(const struct AwdahaPoly *a,
                             const struct AwdahaPoly *b,
                             struct AwdahaPoly **out);

// `a + b`, unnormalized.
//
// # Safety
// `a`, `b` must be live handles and `out` a valid pointer.
enum AwdahaStatus awdaha_add(const struct AwdahaPoly *a,
                             const struct AwdahaPoly *b,
                             struct AwdahaPoly **out);

// `a - b`, unnormalized.
//
// # Safety
// `a`, `b` must be live handles and `out` a valid pointer.
enum AwdahaStatus awdaha_sub(const struct AwdahaPoly *a,
                             const struct AwdahaPoly *b,
                             struct AwdahaPoly **out);

// Writes whether `a` and `b` have the same normal form.
//
// # Safety
// `a`, `b` must be live handles and `out` a valid pointer.
enum AwdahaStatus awdaha_equal(const struct AwdahaPoly *a, const struct AwdahaPoly *b, bool *out);

// Writes the algebra an element belongs to.
//
// # Safety
// `p` must be a live handle and `out` a valid pointer.
enum AwdahaStatus awdaha_poly_algebra(const struct AwdahaPoly *p, enum AwdahaAlgebra *out);

// Text form of `p`, in the syntax accepted by [`awdaha_parse`].
//
// # Safety
// `p` must be a live handle and `out` a valid pointer.
enum AwdahaStatus awdaha_to_string(const struct AwdahaPoly *p, char **out);

// Image of an Askey-Wilson element in the DAHA.
//
// # Safety
// `p` must be a live handle and `out` a valid pointer.
enum AwdahaStatus awdaha_psi(const struct AwdahaPoly *p, struct AwdahaPoly **out);

// Image of `p` under a braid group generator acting on its algebra.
//
// # Safety
// `p` must be a live handle and `out` a valid pointer.
enum AwdahaStatus awdaha_braid(enum AwdahaBraid gen,
                               const struct AwdahaPoly *p,
                               struct AwdahaPoly **out);

// Coefficient matrix of a DAHA element as a JSON array of
// `{"i", "j", "entry"}` objects.
//
// # Safety
// `p` must be a live handle and `out` a valid pointer.
enum AwdahaStatus awdaha_coeff_matrix_json(const struct AwdahaPoly *p, char **out);

// Number of irreducible words of length exactly `len`.
//
// # Safety
// `out` must be a valid pointer.
enum AwdahaStatus awdaha_basis_count(enum AwdahaAlgebra alg, size_t len, size_t *out);

// Runs a verification suite by name. Returns `AWDAHA_STATUS_VERIFICATION_FAILED`
// if any check fails. If `report_json` is not NULL it receives the report.
//
// # Safety
// `suite` must be a NUL-terminated string; `report_json` may be NULL.
enum AwdahaStatus awdaha_verify(const char *suite, char **report_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AWDAHA_H */
