/* C interface to the inverse hull library. */
#ifndef IHULL_H
#define IHULL_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define IHULL_API __declspec(dllexport)
#else
#define IHULL_API __attribute__((visibility("default")))
#endif

typedef struct ihull_semigroup ihull_semigroup;

typedef enum {
  IHULL_OK = 0,
  IHULL_E_INPUT,         /* malformed input or failed validation */
  IHULL_E_PRECONDITION,  /* operation hypothesis not met */
  IHULL_E_CAP,           /* --max-hull exceeded */
  IHULL_E_BUDGET,        /* --max-cover or enumeration budget exceeded */
  IHULL_E_VERIFY,        /* report produced, some check failed */
  IHULL_E_ARGUMENT,      /* null pointer or bad index */
  IHULL_E_INTERNAL
} ihull_status;

typedef struct {
  int zero_left_cancellative;
  int zero_right_cancellative;
  int categorical_at_zero;
  int right_reductive;
  int right_local_units;
  int unital;
  int admits_lcms;
} ihull_flags;

typedef struct {
  int json;             /* nonzero: JSON report, else text */
  int oracle;           /* nonzero: brute-force cross-checks */
  size_t max_hull;
  int max_cover;
  const char* suite;    /* verify selector, NULL for all */
  int syllable_bound;   /* freeprod lcm verification */
} ihull_options;

IHULL_API const char* ihull_version(void);
IHULL_API const char* ihull_status_name(ihull_status s);
/* Message of the last failed call on this thread, "" if none. */
IHULL_API const char* ihull_last_error(void);

/* spec is a file path or "fixture:NAME". */
IHULL_API ihull_status ihull_load(const char* spec, ihull_semigroup** out);
IHULL_API ihull_status ihull_load_text(const char* text, ihull_semigroup** out);
IHULL_API void ihull_free(ihull_semigroup* h);

IHULL_API int ihull_size(const ihull_semigroup* h);
/* Borrowed pointer, valid while h lives; NULL when out of range. */
IHULL_API const char* ihull_element_name(const ihull_semigroup* h, int index);
IHULL_API int ihull_element_index(const ihull_semigroup* h, const char* name);
IHULL_API int ihull_zero(const ihull_semigroup* h);
IHULL_API ihull_status ihull_product(const ihull_semigroup* h, int x, int y, int* out);
IHULL_API ihull_status ihull_get_flags(const ihull_semigroup* h, ihull_flags* out);
/* *out = -1 when no lcm exists. */
IHULL_API ihull_status ihull_lcm(const ihull_semigroup* h, int s, int t, int* out);

IHULL_API void ihull_options_init(ihull_options* opts);
/* On IHULL_OK and IHULL_E_VERIFY *report holds the rendering; release it with ihull_string_free. */
IHULL_API ihull_status ihull_run(const ihull_semigroup* h, const char* command, const ihull_options* opts,
                                 char** report);
IHULL_API ihull_status ihull_freeprod(const ihull_semigroup* m, const ihull_semigroup* n, const char* const* exprs,
                                      size_t count, const ihull_options* opts, char** report);
IHULL_API void ihull_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
