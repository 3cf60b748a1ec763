#ifndef BINDERS_H
#define BINDERS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BindersStatus {
  BINDERS_STATUS_OK = 0,
  BINDERS_STATUS_NULL_POINTER = 1,
  BINDERS_STATUS_INVALID_UTF8 = 2,
  BINDERS_STATUS_PARSE = 3,
  BINDERS_STATUS_INVALID = 4,
  BINDERS_STATUS_OUT_OF_RANGE = 5,
  BINDERS_STATUS_PANIC = 6,
} BindersStatus;

/**
 * The outcome of a law check.
 */
typedef struct BindersReport BindersReport;

/**
 * A parsed binding signature.
 */
typedef struct BindersSignature BindersSignature;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message of the last failed call on this thread, or null. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *binders_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void binders_string_free(char *s);

/**
 * Parses a signature in the `sig name { c : [k, ...]; }` format.
 *
 * # Safety
 * `source` must be a NUL-terminated string and `out` writable.
 */
enum BindersStatus binders_signature_parse(const char *source, struct BindersSignature **out);

/**
 * The untyped lambda calculus: `app : [0, 0]` and `abs : [1]`.
 */
struct BindersSignature *binders_signature_lambda(void);

/**
 * # Safety
 * `sig` must come from this library and not have been freed; null is ignored.
 */
void binders_signature_free(struct BindersSignature *sig);

/**
 * Renders a signature in canonical form.
 *
 * # Safety
 * `sig` must be a live handle and `out` writable.
 */
enum BindersStatus binders_signature_render(const struct BindersSignature *sig, char **out);

/**
 * Number of terms of depth below `depth` in scope `scope`, saturating at
 * `UINT64_MAX`.
 *
 * # Safety
 * `sig` must be a live handle and `out` writable.
 */
enum BindersStatus binders_count_terms(const struct BindersSignature *sig,
                                       size_t scope,
                                       size_t depth,
                                       uint64_t *out);

/**
 * Substitutes `images[i]` (terms in scope `target`) for variable `i` of
 * `term` (a term in scope `scope`). `image_count` must equal `scope`.
 *
 * # Safety
 * `sig` must be a live handle, `term` and the `image_count` entries of
 * `images` NUL-terminated strings, and `out` writable.
 */
enum BindersStatus binders_substitute(const struct BindersSignature *sig,
                                      const char *term,
                                      size_t scope,
                                      const char *const *images,
                                      size_t image_count,
                                      size_t target,
                                      char **out);

/**
 * Checks the laws of a finite category given as a JSON document.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` writable.
 */
enum BindersStatus binders_check_category(const char *json, struct BindersReport **out);

/**
 * Checks a monoidal category given as a JSON document.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` writable.
 */
enum BindersStatus binders_check_monoidal(const char *json, struct BindersReport **out);

/**
 * Exhaustively checks the substitution monad laws for terms of depth below
 * `depth` in scopes up to `max_scope`.
 *
 * # Safety
 * `sig` must be a live handle and `out` writable.
 */
enum BindersStatus binders_check_monad_laws(const struct BindersSignature *sig,
                                            size_t depth,
                                            size_t max_scope,
                                            struct BindersReport **out);

/**
 * # Safety
 * `report` must come from this library and not have been freed; null is ignored.
 */
void binders_report_free(struct BindersReport *report);

/**
 * 1 if no law was violated, 0 otherwise (including a null handle).
 *
 * # Safety
 * `report` must be a live handle or null.
 */
int32_t binders_report_passed(const struct BindersReport *report);

/**
 * # Safety
 * `report` must be a live handle or null.
 */
size_t binders_report_checks_run(const struct BindersReport *report);

/**
 * # Safety
 * `report` must be a live handle or null.
 */
size_t binders_report_violation_count(const struct BindersReport *report);

/**
 * The law name and witness of violation `index`.
 *
 * # Safety
 * `report` must be a live handle; `law` and `witness` must be writable.
 */
enum BindersStatus binders_report_violation(const struct BindersReport *report,
                                            size_t index,
                                            char **law,
                                            char **witness);

/**
 * The report as a JSON object with `checks_run` and `violations`.
 *
 * # Safety
 * `report` must be a live handle and `out` writable.
 */
enum BindersStatus binders_report_json(const struct BindersReport *report, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BINDERS_H */
