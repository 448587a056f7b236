#ifndef ROOTINT_H
#define ROOTINT_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes.
typedef enum RootintStatus {
  ROOTINT_STATUS_OK = 0,
  // Malformed input, including invalid UTF-8.
  ROOTINT_STATUS_INPUT_ERROR = 1,
  // A size guard refused the computation.
  ROOTINT_STATUS_CAPACITY_ERROR = 2,
  // An internal invariant failed or the library panicked.
  ROOTINT_STATUS_INTERNAL_ERROR = 3,
  // A required pointer argument was null.
  ROOTINT_STATUS_NULL_POINTER = 4,
} RootintStatus;

// Opaque handle to a built root system.
typedef struct RootintSystem RootintSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failure on this thread, or null. Owned by the
// library and valid until the next call on the same thread.
const char *rootint_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void rootint_string_free(char *s);

// Builds the root system named by `type_name`, e.g. `"B2"` or `"A1xG2"`.
//
// # Safety
// `type_name` must be a NUL-terminated string; `out` must be writable.
enum RootintStatus rootint_system_new(const char *type_name, struct RootintSystem **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `h` must come from [`rootint_system_new`] and not have been freed.
void rootint_system_free(struct RootintSystem *h);

// Rank of the system.
//
// # Safety
// `h` must be a live handle.
uintptr_t rootint_system_rank(const struct RootintSystem *h);

// Number of roots, positive and negative.
//
// # Safety
// `h` must be a live handle.
uintptr_t rootint_system_root_count(const struct RootintSystem *h);

// Canonical type string of the system, e.g. `"A1xB2"`.
//
// # Safety
// `h` must be a live handle and `out` writable.
enum RootintStatus rootint_system_type(const struct RootintSystem *h, char **out);

// The integer `N_Σ`, as a decimal string.
//
// # Safety
// `h` must be a live handle and `out` writable.
enum RootintStatus rootint_system_n_sigma(const struct RootintSystem *h, char **out);

// Rank-one bound for the Levi type `type_name`; the empty string means no
// components. Decimal string output.
//
// # Safety
// `type_name` must be a NUL-terminated string and `out` writable.
enum RootintStatus rootint_rank_one_bound(const char *type_name, char **out);

// Elementary divisors of a row-major `rows × cols` integer matrix, written
// as a JSON array of decimal strings.
//
// # Safety
// `entries` must point to `rows * cols` values and `out` be writable.
enum RootintStatus rootint_snf_divisors(const int64_t *entries,
                                        uintptr_t rows,
                                        uintptr_t cols,
                                        char **out);

// Runs the command-line interface in process. `argv[0]` is the program
// name. Captured stdout and stderr are returned as strings and the process
// exit code in `exit_code`.
//
// # Safety
// `argv` must point to `argc` NUL-terminated strings; outputs writable.
enum RootintStatus rootint_cli_run(const char *const *argv,
                                   uintptr_t argc,
                                   char **out_stdout,
                                   char **out_stderr,
                                   int *exit_code);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ROOTINT_H */
