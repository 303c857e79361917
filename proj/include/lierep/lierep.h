#ifndef LIEREP_LIEREP_H
#define LIEREP_LIEREP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LIEREP_API __declspec(dllexport)
#else
#define LIEREP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lierep_status {
  LIEREP_OK = 0,
  LIEREP_INVALID_ARGUMENT = 1,
  LIEREP_INVALID_SPEC = 2,
  LIEREP_NOT_DOMINANT = 3,
  LIEREP_NOT_A_CHARACTER = 4,
  LIEREP_INVALID_EMBEDDING = 5,
  LIEREP_SINGULAR_POINT = 6,
  LIEREP_NOT_LOCALLY_FINITE = 7,
  LIEREP_INSUFFICIENT_SAMPLES = 8,
  LIEREP_INVALID_FACE = 9,
  LIEREP_IO_ERROR = 10,
  LIEREP_INTERNAL = 11,
  /* lierep_verify ran and at least one check failed */
  LIEREP_VERIFICATION_FAILED = 12,
} lierep_status;

typedef enum lierep_format {
  LIEREP_FORMAT_JSON = 0,
  LIEREP_FORMAT_CSV = 1,
} lierep_format;

typedef struct lierep_context lierep_context;

LIEREP_API const char* lierep_version(void);
LIEREP_API const char* lierep_status_name(lierep_status status);
/* Message of the last failed call on this thread ("" after success). */
LIEREP_API const char* lierep_last_error(void);
/* Every char** output below is allocated by the library. */
LIEREP_API void lierep_string_free(char* s);

LIEREP_API lierep_status lierep_context_new(lierep_context** out);
LIEREP_API void lierep_context_free(lierep_context* ctx);
LIEREP_API lierep_status lierep_context_set_format(lierep_context* ctx, lierep_format format);
/* dir == NULL keeps the default ($LIEREP_CACHE_DIR or a per-user directory). */
LIEREP_API lierep_status lierep_context_set_cache(lierep_context* ctx, int enabled, const char* dir);

/*
 * Cartan types are strings such as "A2", "B2xT1". Weights are comma
 * separated integers in fundamental-weight coordinates, e.g. "1,0".
 * Embeddings are builtin names ("diagonal:A2", "torus:A1", "levi:A2") or
 * paths to a JSON file {"big", "small", "matrix", "label"}.
 */
LIEREP_API lierep_status lierep_roots(lierep_context* ctx, const char* type, char** out);
LIEREP_API lierep_status lierep_dim(lierep_context* ctx, const char* type, const char* weight, char** out);
LIEREP_API lierep_status lierep_weights(lierep_context* ctx, const char* type, const char* weight, char** out);
LIEREP_API lierep_status lierep_tensor(lierep_context* ctx, const char* type, const char* lhs, const char* rhs,
                                       char** out);
/* plain != 0 decomposes V~ itself instead of its dual. */
LIEREP_API lierep_status lierep_branch(lierep_context* ctx, const char* embedding, const char* weight, int plain,
                                       char** out);
LIEREP_API lierep_status lierep_table(lierep_context* ctx, const char* embedding, int bound, char** out);
LIEREP_API lierep_status lierep_cone(lierep_context* ctx, const char* embedding, int bound, char** out);
LIEREP_API lierep_status lierep_stretch(lierep_context* ctx, const char* embedding, const char* big,
                                        const char* small, int kmax, char** out);
/* Fits the stretched sequence on k <= kfit and checks the prediction for kfit < k <= khold.
   Returns LIEREP_VERIFICATION_FAILED (with the report in *out) when there is no fit or a hold-out mismatch. */
LIEREP_API lierep_status lierep_stretch_fit(lierep_context* ctx, const char* embedding, const char* big,
                                            const char* small, int kfit, int khold, int max_degree, int max_period,
                                            char** out);
/* samples: "v0,v1,..." (values at k = 0, 1, ...) or "k:v,k:v,..."; values may be "p/q". */
LIEREP_API lierep_status lierep_fit(lierep_context* ctx, const char* samples, int max_degree, int max_period,
                                    char** out);
/* face: builtin face name or path to a face JSON file. */
LIEREP_API lierep_status lierep_face_check(lierep_context* ctx, const char* face, int bound, char** out);
/* weights: ';' separated weights of a representation of `type`. */
LIEREP_API lierep_status lierep_sym_invariants(lierep_context* ctx, const char* type, const char* weights,
                                               int max_degree, char** out);
/* point: comma separated nonzero rationals, one per coordinate. */
LIEREP_API lierep_status lierep_localize(lierep_context* ctx, const char* type, const char* weight,
                                         const char* point, char** out);
/* suite: "all" or a suite name; config_path may be NULL for the default runs. */
LIEREP_API lierep_status lierep_verify(lierep_context* ctx, const char* suite, uint64_t seed,
                                       const char* config_path, char** out);

#ifdef __cplusplus
}
#endif

#endif
