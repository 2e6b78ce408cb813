#ifndef HURWITZ_H
#define HURWITZ_H

/* C interface to the library. Strings returned through char** are owned by
   the caller and released with hz_string_free. */

#if defined(HZ_BUILDING)
#define HZ_API __attribute__((visibility("default")))
#else
#define HZ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hz_context hz_context;

typedef enum {
  HZ_OK = 0,
  HZ_DIVISION_BY_ZERO,
  HZ_VARIABLE_MISMATCH,
  HZ_POLE_AT_ASSIGNMENT,
  HZ_LOG_OF_NON_UNIT,
  HZ_SINGULAR_SYSTEM,
  HZ_INVALID_PADDING,
  HZ_ODD_SIZE,
  HZ_NOT_SKEW,
  HZ_DEGENERATE_SPECTRUM,
  HZ_NON_CANCELLING_POLE,
  HZ_BUDGET_EXCEEDED,
  HZ_CONFIG_ERROR,
  HZ_PARSE_ERROR,
  HZ_INVALID_ARGUMENT,
  HZ_UNKNOWN_NAME,
  HZ_INTERNAL
} hz_status;

HZ_API hz_context* hz_context_new(void);
HZ_API void hz_context_free(hz_context* ctx);

/* Message and code of the last failing call on this context. */
HZ_API const char* hz_last_error(const hz_context* ctx);
HZ_API hz_status hz_last_status(const hz_context* ctx);

/* Newline-separated names accepted by hz_check and hz_query. */
HZ_API const char* hz_check_names(void);
HZ_API const char* hz_query_names(void);

/* Runs a named check with JSON parameters. Writes one JSON report per line,
   sorted by identity then parameters, and sets *passed to 1 iff every
   report passed. */
HZ_API hz_status hz_check(hz_context* ctx, const char* name, const char* params_json, char** jsonl,
                          int* passed);

/* Computes a named table or series (tau-expand, feray-table, ortho-dim,
   bgw-orthogonal, bgw-unitary, oracle-counts) as a JSON document. */
HZ_API hz_status hz_query(hz_context* ctx, const char* name, const char* params_json, char** json_out);

/* Number of acceptance criteria and the title of criterion k (1-based). */
HZ_API int hz_criteria_count(void);
HZ_API const char* hz_criterion_title(int k);

HZ_API void hz_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
