#ifndef CORNER_CORNER_H
#define CORNER_CORNER_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CORNER_API __declspec(dllexport)
#else
#define CORNER_API __attribute__((visibility("default")))
#endif

typedef enum corner_status {
  CORNER_OK = 0,
  CORNER_E_SYNTAX,
  CORNER_E_DANGLING_FACE,
  CORNER_E_DIMENSION_MISMATCH,
  CORNER_E_INVALID_INPUT,
  CORNER_E_DIMENSION_CAP,
  CORNER_E_CLOSURE_BUDGET,
  CORNER_E_BAD_LEVEL,
  CORNER_E_NOT_DECOMPOSABLE,
  CORNER_E_INCOMPATIBLE_ASSIGNMENT,
  CORNER_E_NOT_LENGTH_AT_MOST_ONE,
  CORNER_E_NOT_NON_CONTRACTING,
  CORNER_E_UNKNOWN_STATE,
  CORNER_E_BAD_INDEX,
  CORNER_E_NOT_COMPOSABLE,
  CORNER_E_NOT_FILLABLE,
  CORNER_E_SOURCE_MISMATCH,
  CORNER_E_NOT_BRANCHING,
  CORNER_E_ILL_FORMED_COMPLEX,
  CORNER_E_BAD_ARGUMENT,
  CORNER_E_INTERNAL,
  CORNER_E_IO,
  CORNER_E_NULL
} corner_status;

typedef enum corner_format { CORNER_FORMAT_JSON = 0, CORNER_FORMAT_TABLE = 1 } corner_format;

/* A finite omega-category, optionally with the precubical set it was built from. */
typedef struct corner_category corner_category;

CORNER_API const char* corner_status_name(corner_status s);
/* Message of the last failed call on this thread; never NULL. */
CORNER_API const char* corner_last_error(void);
CORNER_API void corner_string_free(char* s);

/* Dimension cap in effect: CORNER_MAX_DIM if set and valid, else the default. */
CORNER_API int corner_max_dim(void);

/* source: a file path, or builtin:2_p, builtin:G_p, builtin:I_n. */
CORNER_API corner_status corner_category_load(const char* source, corner_category** out);
/* text: a precubical set document. */
CORNER_API corner_status corner_category_from_json(const char* text, corner_category** out);
CORNER_API void corner_category_free(corner_category* c);
CORNER_API corner_status corner_category_morphisms(const corner_category* c, int dim, size_t* out);

/* Validation report as JSON; *ok is 1 when there are no violations. */
CORNER_API corner_status corner_validate(const corner_category* c, corner_format format, int* ok,
                                         char** report);
/* Parses and validates a precubical set document without rejecting violations. */
CORNER_API corner_status corner_validate_text(const char* text, corner_format format, int* ok,
                                              char** report);

/* theory: branching, merging, reduced-branching, formal, goubault-minus, goubault-plus. */
CORNER_API corner_status corner_homology(const corner_category* c, const char* theory, int max_dim,
                                         corner_format format, char** out);

/* filter: all, branching, merging. */
CORNER_API corner_status corner_nerve(const corner_category* c, int dim, const char* filter,
                                      size_t* count, char** json);

/* Folds branching cube number index of degree dim. */
CORNER_API corner_status corner_fold(const corner_category* c, int dim, size_t index, int trace,
                                     corner_format format, char** out);

/* Axiom and commutation harness; *ok is 1 when every check passes. */
CORNER_API corner_status corner_check_laws(const corner_category* c, int max_dim, size_t samples,
                                           uint64_t seed, corner_format format, int* ok,
                                           char** report);

CORNER_API corner_status corner_crosscheck_calcul(const corner_category* c, int up_to,
                                                  corner_format format, int* ok, char** report);

#ifdef __cplusplus
}
#endif

#endif
