#ifndef COMPLICIAL_H
#define COMPLICIAL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ComplicialStatus {
  COMPLICIAL_STATUS_OK = 0,
  /**
   * The checked property does not hold.
   */
  COMPLICIAL_STATUS_FAIL = 1,
  COMPLICIAL_STATUS_NULL_ARGUMENT = 2,
  COMPLICIAL_STATUS_INVALID_ARGUMENT = 3,
  COMPLICIAL_STATUS_PARSE_ERROR = 4,
  COMPLICIAL_STATUS_INVALID_INPUT = 5,
  COMPLICIAL_STATUS_BUDGET_EXCEEDED = 6,
  COMPLICIAL_STATUS_INTERNAL = 7,
} ComplicialStatus;

typedef enum ComplicialProperty {
  COMPLICIAL_PROPERTY_COMPLICIAL = 0,
  COMPLICIAL_PROPERTY_STRICT_COMPLICIAL = 1,
  COMPLICIAL_PROPERTY_SATURATED = 2,
  /**
   * Uses `param` as n.
   */
  COMPLICIAL_PROPERTY_N_TRIVIAL = 3,
  COMPLICIAL_PROPERTY_QUASICATEGORY = 4,
  /**
   * Uses `param` as n.
   */
  COMPLICIAL_PROPERTY_COSKELETAL = 5,
} ComplicialProperty;

/**
 * A stratified simplicial set.
 */
typedef struct ComplicialComplex ComplicialComplex;

/**
 * A strict ω-category given by tables.
 */
typedef struct ComplicialOmega ComplicialOmega;

/**
 * The outcome of a property check.
 */
typedef struct ComplicialReport ComplicialReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last error on this thread. Valid until the next call on this thread.
 */
const char *complicial_last_error(void);

/**
 * Frees a string returned by this library.
 *
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void complicial_string_free(char *s);

/**
 * Parses a complex document.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum ComplicialStatus complicial_complex_parse(const char *json, struct ComplicialComplex **out);

/**
 * Prints a complex as a document. Free the result with [`complicial_string_free`].
 *
 * # Safety
 * `c` must be a live handle and `out` a valid pointer.
 */
enum ComplicialStatus complicial_complex_print(const struct ComplicialComplex *c, char **out);

/**
 * # Safety
 * `c` must be null or a live handle.
 */
void complicial_complex_free(struct ComplicialComplex *c);

/**
 * Nondegenerate simplices of dimension `dim`.
 *
 * # Safety
 * `c` must be a live handle.
 */
size_t complicial_complex_count(const struct ComplicialComplex *c, size_t dim);

/**
 * Dimension bound of the complex.
 *
 * # Safety
 * `c` must be a live handle.
 */
size_t complicial_complex_bound(const struct ComplicialComplex *c);

/**
 * Number of marked nondegenerate simplices.
 *
 * # Safety
 * `c` must be a live handle.
 */
size_t complicial_complex_marked(const struct ComplicialComplex *c);

/**
 * A named shape; `standard`, `boundary`, `horn`, `admissible`, `primed`,
 * `double-primed`, `thin-top`, `sharp` or `saturation`. Generating inclusions
 * yield their codomain. Unused parameters are ignored.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum ComplicialStatus complicial_shape(const char *name,
                                       int64_t n,
                                       int64_t k,
                                       int64_t m,
                                       struct ComplicialComplex **out);

/**
 * Checks a property up to `bound`. Returns `Ok` or `Fail` with a report in `out`.
 * A `budget` of 0 uses the environment default.
 *
 * # Safety
 * `c` must be a live handle and `out` a valid pointer.
 */
enum ComplicialStatus complicial_check(const struct ComplicialComplex *c,
                                       enum ComplicialProperty property,
                                       size_t param,
                                       size_t bound,
                                       uint64_t budget,
                                       struct ComplicialReport **out);

/**
 * # Safety
 * `r` must be a live handle.
 */
bool complicial_report_passed(const struct ComplicialReport *r);

/**
 * Prints a report, with its witness, as a document.
 *
 * # Safety
 * `r` must be a live handle and `out` a valid pointer.
 */
enum ComplicialStatus complicial_report_print(const struct ComplicialReport *r, char **out);

/**
 * # Safety
 * `r` must be null or a live handle.
 */
void complicial_report_free(struct ComplicialReport *r);

/**
 * Parses an ω-category document.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum ComplicialStatus complicial_omega_parse(const char *json, struct ComplicialOmega **out);

/**
 * A built-in fixture by name, such as `walking-iso` or `two-cell`.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum ComplicialStatus complicial_omega_fixture(const char *name, struct ComplicialOmega **out);

/**
 * Prints an ω-category as a document.
 *
 * # Safety
 * `c` must be a live handle and `out` a valid pointer.
 */
enum ComplicialStatus complicial_omega_print(const struct ComplicialOmega *c, char **out);

/**
 * # Safety
 * `c` must be null or a live handle.
 */
void complicial_omega_free(struct ComplicialOmega *c);

/**
 * The Street nerve up to `bound` (0 for the default) with the named
 * stratification (`identity`, `saturated1` or `saturated2`).
 *
 * # Safety
 * `c` must be a live handle, `stratification` a NUL-terminated string and `out` a valid pointer.
 */
enum ComplicialStatus complicial_nerve(const struct ComplicialOmega *c,
                                       size_t bound,
                                       const char *stratification,
                                       uint64_t budget,
                                       struct ComplicialComplex **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COMPLICIAL_H */
