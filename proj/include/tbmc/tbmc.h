/*
 * Copyright 2026 The TBMC Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the template engine.
 *
 * Every function returns a tbmc_status. On failure a message is available
 * from tbmc_last_error() until the next call on the same thread. Strings
 * returned through `char** out` are owned by the caller and released with
 * tbmc_string_free().
 */
#ifndef TBMC_TBMC_H
#define TBMC_TBMC_H

#include <stddef.h>

#if defined(TBMC_BUILDING_LIBRARY)
#define TBMC_API __attribute__((visibility("default")))
#else
#define TBMC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tbmc_status {
  TBMC_OK = 0,
  TBMC_E_INVALID_ARGUMENT = 1,
  TBMC_E_NOT_FOUND = 2,
  TBMC_E_VALIDATION = 3,
  TBMC_E_DERIVATION = 4,
  TBMC_E_CYCLE = 5,
  TBMC_E_LIMIT = 6,
  TBMC_E_PARSE = 7,
  TBMC_E_INTERNAL = 8
} tbmc_status;

typedef enum tbmc_format { TBMC_FORMAT_TEXT = 0, TBMC_FORMAT_RECORDS = 1 } tbmc_format;

typedef struct tbmc_corpus tbmc_corpus;

/* Ad hoc derivation from an existing item. NULL strings mean "unset". */
typedef struct tbmc_derive_request {
  const char* base;
  const char* via; /* CONV, MDERIV, WIDEN or BORROW */
  const char* target;
  int animate;
  const char* donor_gender;
  const char* gradcond;
} tbmc_derive_request;

/* Comma-separated flag and cognitive-set lists. NULL keeps the default. */
typedef struct tbmc_estimate_filter {
  const char* require_any_of;
  const char* exclude;
  const char* unfiltered;
  const char* language; /* "" tallies every language */
} tbmc_estimate_filter;

TBMC_API const char* tbmc_version(void);
TBMC_API const char* tbmc_last_error(void);
TBMC_API const char* tbmc_status_name(tbmc_status status);
TBMC_API void tbmc_string_free(char* s);

TBMC_API tbmc_status tbmc_corpus_load_file(const char* path, tbmc_corpus** out);
TBMC_API tbmc_status tbmc_corpus_load_text(const char* text, size_t length, tbmc_corpus** out);
TBMC_API void tbmc_corpus_free(tbmc_corpus* corpus);
TBMC_API size_t tbmc_corpus_live_count(const tbmc_corpus* corpus);

/* *all_match is set to 1 when every expectation holds. */
TBMC_API tbmc_status tbmc_validate(const tbmc_corpus* corpus, tbmc_format format, char** out, int* all_match);

TBMC_API tbmc_status tbmc_derive_item(const tbmc_corpus* corpus, const char* id, tbmc_format format, char** out);
TBMC_API tbmc_status tbmc_derive_adhoc(const tbmc_corpus* corpus, const tbmc_derive_request* request,
                                       tbmc_format format, char** out);

/* Operand p with base Δ p = result. Both templates are plain text bodies. */
TBMC_API tbmc_status tbmc_solve(const char* base, const char* result, tbmc_format format, char** out);

TBMC_API tbmc_status tbmc_trace(const tbmc_corpus* corpus, const char* id, tbmc_format format, char** out);

/* `corpus` may be NULL; then only the built-in profiles are known. */
TBMC_API tbmc_status tbmc_enumerate(const tbmc_corpus* corpus, const char* profile, int well_formed,
                                    tbmc_format format, char** out, size_t* count);

/* *complete is set to 1 when every cognitive set has a unique winner. */
TBMC_API tbmc_status tbmc_estimate(const tbmc_corpus* corpus, const tbmc_estimate_filter* filter,
                                   tbmc_format format, char** out, int* complete);

/* *all_passed is set to 1 when every oracle check passes. */
TBMC_API tbmc_status tbmc_selfcheck(unsigned atoms, tbmc_format format, char** out, int* all_passed);

/* Canonical corpus text. */
TBMC_API tbmc_status tbmc_serialize(const tbmc_corpus* corpus, char** out);

/* Δ of two feature sets, rendered without spaces. */
TBMC_API tbmc_status tbmc_symmetric_difference(const char* a, const char* b, char** out);

#ifdef __cplusplus
}
#endif

#endif /* TBMC_TBMC_H */
