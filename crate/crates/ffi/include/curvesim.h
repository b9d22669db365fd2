#ifndef CURVESIM_H
#define CURVESIM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible call.
typedef enum CsStatus {
  CS_STATUS_OK = 0,
  CS_STATUS_NULL_POINTER = 1,
  CS_STATUS_INVALID_UTF8 = 2,
  CS_STATUS_PARSE_ERROR = 3,
  // The input violates a precondition (line, circle, constant, ...).
  CS_STATUS_PRECONDITION = 4,
  // The analysis could not finish (for example infinitely many solutions).
  CS_STATUS_ANALYSIS_FAILED = 5,
  CS_STATUS_PANIC = 6,
} CsStatus;

typedef enum CsOrientation {
  CS_ORIENTATION_BOTH = 0,
  CS_ORIENTATION_PRESERVING = 1,
  CS_ORIENTATION_REVERSING = 2,
} CsOrientation;

// A parsed curve `f(x, y) = 0`.
typedef struct CsCurve CsCurve;

// The outcome of a similarity check.
typedef struct CsResult CsResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a curve equation such as `"x^3 + y^3 - 3*x*y"`.
//
// # Safety
// `text` must be a valid NUL-terminated string and `out` a valid pointer.
enum CsStatus cs_curve_parse(const char *text, struct CsCurve **out);

// Releases a curve. Null is ignored.
//
// # Safety
// `curve` must come from `cs_curve_parse` and not be used afterwards.
void cs_curve_free(struct CsCurve *curve);

// Canonical text of a curve, or null on a null handle.
//
// # Safety
// `curve` must be null or a live handle.
char *cs_curve_to_string(const struct CsCurve *curve);

// Finds every similarity mapping `f = 0` onto `g = 0`.
//
// # Safety
// `f` and `g` must be live handles and `out` a valid pointer.
enum CsStatus cs_check(const struct CsCurve *f,
                       const struct CsCurve *g,
                       enum CsOrientation orientation,
                       struct CsResult **out);

// 1 if at least one similarity was found, 0 if none, -1 on a null handle.
//
// # Safety
// `result` must be null or a live handle.
int32_t cs_result_is_similar(const struct CsResult *result);

// Number of similarities found; 0 on a null handle.
//
// # Safety
// `result` must be null or a live handle.
uintptr_t cs_result_count(const struct CsResult *result);

// The result as the JSON document printed by `curvesim check --json`.
//
// # Safety
// `result` must be null or a live handle.
char *cs_result_json(const struct CsResult *result);

// Releases a result. Null is ignored.
//
// # Safety
// `result` must come from `cs_check` and not be used afterwards.
void cs_result_free(struct CsResult *result);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void cs_string_free(char *s);

// Message for the last failed call on this thread, or null. The pointer
// stays valid until the next failing call on the same thread.
const char *cs_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CURVESIM_H */
