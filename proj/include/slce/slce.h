// Copyright 2026 The SLCE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the SLCE library. Every call that can fail returns an
 * slce_status; on failure slce_last_error() describes the cause. Strings
 * returned through char** are heap allocated and released with
 * slce_string_free(). */
#ifndef SLCE_SLCE_H_
#define SLCE_SLCE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SLCE_BUILDING_LIBRARY)
#define SLCE_API __declspec(dllexport)
#else
#define SLCE_API __declspec(dllimport)
#endif
#else
#define SLCE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum slce_status {
  SLCE_OK = 0,
  SLCE_ERR_COMPOSITE_P = 1,
  SLCE_ERR_SIZE_EXCEEDED = 2,
  SLCE_ERR_DIVISION_BY_ZERO = 3,
  SLCE_ERR_LOG_OF_ZERO = 4,
  SLCE_ERR_EVEN_K = 5,
  SLCE_ERR_K_IS_ONE = 6,
  SLCE_ERR_BAD_ALPHABET = 7,
  SLCE_ERR_NOT_BINARY = 8,
  SLCE_ERR_BOTH_ZERO = 9,
  SLCE_ERR_ZERO_POLYNOMIAL = 10,
  SLCE_ERR_CONDUCTOR_MISMATCH = 11,
  SLCE_ERR_NOT_SEMIPRIMITIVE = 12,
  SLCE_ERR_PRECONDITION_UNMET = 13,
  SLCE_ERR_H_OUT_OF_RANGE = 14,
  SLCE_ERR_BAD_ARGUMENT = 15,
  SLCE_ERR_NULL_POINTER = 98,
  SLCE_ERR_INTERNAL = 99
} slce_status;

typedef enum slce_format {
  SLCE_FORMAT_JSON = 0, /* JSON lines for sweeps */
  SLCE_FORMAT_CSV = 1
} slce_format;

typedef struct slce_field slce_field;
typedef struct slce_sequence slce_sequence;

typedef struct slce_field_info {
  uint32_t p;
  uint32_t m;
  uint64_t q;
  /* alpha as base-p digits packed little endian (digit i weighs p^i). */
  uint32_t alpha_code;
} slce_field_info;

typedef struct slce_balance {
  uint64_t period;
  uint64_t ones;
  int middle_term_zero; /* s_{T/2} == 0 */
} slce_balance;

typedef struct slce_sweep_config {
  uint64_t q_max;
  uint32_t p_filter; /* 0 = all primes */
  const char* theorems; /* comma list, NULL = "all" */
  unsigned jobs; /* 0 = 1 */
  uint64_t field_cap; /* 0 = 65536 */
} slce_sweep_config;

typedef struct slce_verify_summary {
  uint64_t contexts;
  uint64_t checks;
  uint64_t mismatches;
} slce_verify_summary;

SLCE_API const char* slce_version(void);
SLCE_API const char* slce_status_string(slce_status status);
/* Message for the most recent failure on the calling thread. */
SLCE_API const char* slce_last_error(void);
SLCE_API void slce_string_free(char* str);

/* field_cap = 0 selects the default cap of 65536 elements. */
SLCE_API slce_status slce_field_create(uint32_t p, uint32_t m, uint64_t field_cap,
                                       slce_field** out);
SLCE_API void slce_field_destroy(slce_field* field);
SLCE_API slce_status slce_field_info_get(const slce_field* field, slce_field_info* out);
SLCE_API slce_status slce_field_dlog(const slce_field* field, uint32_t element_code,
                                     uint64_t* out);

SLCE_API slce_status slce_sequence_generate(const slce_field* field, uint32_t d,
                                            slce_sequence** out);
SLCE_API void slce_sequence_destroy(slce_sequence* seq);
SLCE_API uint64_t slce_sequence_period(const slce_sequence* seq);
/* Copies min(len, period) terms into buf. */
SLCE_API slce_status slce_sequence_terms(const slce_sequence* seq, uint32_t* buf,
                                         size_t len);
SLCE_API slce_status slce_sequence_json(const slce_sequence* seq, char** out);
SLCE_API slce_status slce_sequence_bits(const slce_sequence* seq, char** out);
SLCE_API slce_status slce_sequence_autocorrelation(const slce_sequence* seq,
                                                   uint64_t tau, int64_t* out);
SLCE_API slce_status slce_sequence_balance(const slce_sequence* seq, slce_balance* out);

/* Linear complexity by Berlekamp-Massey, by gcd and by multiplicity profile.
 * *consistent is set to 1 when all three agree. */
SLCE_API slce_status slce_complexity_json(const slce_sequence* seq, char** out,
                                          int* consistent);

/* Gauss sum of eta_{num/den}; den must divide q - 1. */
SLCE_API slce_status slce_gauss_index_json(const slce_field* field, uint64_t num,
                                           uint64_t den, char** out);
SLCE_API slce_status slce_gauss_quadratic_json(const slce_field* field, char** out,
                                               int* agree);
SLCE_API slce_status slce_gauss_semiprimitive_json(const slce_field* field, uint64_t order,
                                                   char** out, int* agree);
/* Exact J(eta_{a1/(q-1)}, eta_{a2/(q-1)}). */
SLCE_API slce_status slce_jacobi_json(const slce_field* field, uint64_t a1, uint64_t a2,
                                      char** out);

SLCE_API slce_status slce_verify(const slce_sweep_config* config, slce_format format,
                                 char** report, slce_verify_summary* summary);
/* *inconsistent receives the number of fields whose three routes disagree. */
SLCE_API slce_status slce_complexity_sweep(const slce_sweep_config* config,
                                           slce_format format, char** report,
                                           uint64_t* inconsistent);

#ifdef __cplusplus
}
#endif

#endif /* SLCE_SLCE_H_ */
