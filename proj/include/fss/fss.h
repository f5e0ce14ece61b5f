/* SPDX-License-Identifier: Apache-2.0 */
#ifndef FSS_FSS_H
#define FSS_FSS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FSS_API __declspec(dllexport)
#else
#define FSS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Finite fuzzy soft topological spaces with exact grades.
 *
 * Every entry point that produces text hands back a heap string through its
 * `out` parameter, which the caller releases with fss_string_free(). On error
 * the same parameter receives the error message instead. Functions never
 * throw across this boundary. */

typedef struct fss_space fss_space;

typedef enum fss_status {
  FSS_OK = 0,
  /* The computation ran, and the checked property does not hold (validation
   * failed, a counterexample was found, a fuzz run saw failures). */
  FSS_FAILED = 1,
  FSS_E_MALFORMED = 2,
  FSS_E_DUPLICATE_NAME = 3,
  FSS_E_GRADE_OUT_OF_RANGE = 4,
  FSS_E_SUBSET_VIOLATION = 5,
  FSS_E_UNKNOWN_NAME = 6,
  FSS_E_SIGNATURE_MISMATCH = 7,
  FSS_E_DOMAIN = 8,
  FSS_E_CONTRACT = 9,
  FSS_E_ENUMERATION_CAP = 10,
  FSS_E_UNKNOWN_PROPERTY = 11,
  FSS_E_OVERFLOW = 12,
  FSS_E_IO = 13,
  FSS_E_INVALID_ARGUMENT = 14,
  FSS_E_INTERNAL = 15
} fss_status;

typedef enum fss_format { FSS_FORMAT_TEXT = 0, FSS_FORMAT_JSON = 1 } fss_format;

typedef enum fss_operator {
  FSS_OP_INTERIOR = 0,
  FSS_OP_CLOSURE = 1,
  FSS_OP_SEMI_INTERIOR = 2,
  FSS_OP_SEMI_CLOSURE = 3
} fss_operator;

FSS_API const char* fss_status_name(fss_status status);
/* 0 for FSS_OK, 1 for FSS_FAILED, 2 for every input error. */
FSS_API int fss_exit_code(fss_status status);
FSS_API void fss_string_free(char* s);

/* Space documents. */
FSS_API fss_status fss_space_parse(const char* text, fss_space** space, char** error);
FSS_API fss_status fss_space_load(const char* path, fss_space** space, char** error);
FSS_API void fss_space_free(fss_space* space);
FSS_API size_t fss_space_member_count(const fss_space* space);
/* Canonical document text. */
FSS_API fss_status fss_space_serialize(const fss_space* space, char** out);

/* Axiom audit of the member family. FSS_FAILED when an axiom is violated. */
FSS_API fss_status fss_validate(const fss_space* space, fss_format format, char** out);
/* Both-route semiopen/semiclosed classification of a named set. */
FSS_API fss_status fss_classify(const fss_space* space, const char* set_name, fss_format format,
                                char** out);
FSS_API fss_status fss_apply(const fss_space* space, fss_operator op, const char* set_name,
                             fss_format format, char** out);
/* Fourteen-item semi-closure/semi-interior suite. FSS_FAILED if any applicable
 * item fails. */
FSS_API fss_status fss_properties(const fss_space* space, const char* g_name,
                                  const char* k_name, fss_format format, char** out);
/* Point decomposition plus the point characterization verdict. */
FSS_API fss_status fss_points(const fss_space* space, const char* set_name, fss_format format,
                              char** out);
/* Document whose topology is the subbasis closure of the member family. */
FSS_API fss_status fss_repair(const fss_space* space, char** out);

typedef struct fss_gen_options {
  uint64_t seed;
  uint32_t universe;
  uint32_t parameters;
  uint32_t grid;
  uint32_t subbasis;
} fss_gen_options;

FSS_API void fss_gen_options_init(fss_gen_options* options);
FSS_API fss_status fss_gen(const fss_gen_options* options, char** out);

typedef struct fss_search_options {
  const char* property; /* semiopen-meet, semiopen-meet-open, semiclosed-join,
                           semiopen-not-open */
  uint64_t budget;
  uint64_t seed;
  uint32_t universe;
  uint32_t parameters;
  uint32_t grid;
  uint32_t max_subbasis;
} fss_search_options;

FSS_API void fss_search_options_init(fss_search_options* options);
/* FSS_FAILED when a counterexample is found. */
FSS_API fss_status fss_search(const fss_search_options* options, fss_format format, char** out);

typedef struct fss_fuzz_options {
  uint64_t seed;
  uint64_t samples;
  uint32_t max_universe;
  uint32_t max_parameters;
  uint32_t max_grid;
  uint32_t max_subbasis;
} fss_fuzz_options;

FSS_API void fss_fuzz_options_init(fss_fuzz_options* options);
/* FSS_FAILED when any sample violates a checked property. */
FSS_API fss_status fss_fuzz(const fss_fuzz_options* options, fss_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* FSS_FSS_H */
