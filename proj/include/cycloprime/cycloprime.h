// Copyright 2026 The cycloprime Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the cycloprime library.
 *
 * Tests numbers M = (2p)^(2^n) + 1 for p in {3, 5, 7, 11, 13, 17, 19}.
 * Results are opaque handles released with cyp_result_free. Strings returned
 * by cyp_result_* stay valid until the handle is freed. Every entry point is
 * safe to call concurrently; cyp_last_error is per thread.
 */
#ifndef CYCLOPRIME_H_
#define CYCLOPRIME_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CYCLOPRIME_API __declspec(dllexport)
#else
#define CYCLOPRIME_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cyp_status {
  CYP_OK = 0,
  CYP_ERR_UNSUPPORTED_P = 1,
  CYP_ERR_BAD_N = 2,
  CYP_ERR_INVALID_ARGUMENT = 3,
  CYP_ERR_INTERNAL = 4
} cyp_status;

typedef enum cyp_outcome {
  CYP_PRIME = 0,
  CYP_COMPOSITE = 1,
  CYP_INAPPLICABLE = 2
} cyp_outcome;

typedef enum cyp_mode {
  CYP_MODE_AUTO = 0,
  CYP_MODE_GENERAL = 1,
  CYP_MODE_RECURRENCE = 2
} cyp_mode;

typedef enum cyp_baseline {
  CYP_BASELINE_LUCAS_LEHMER = 0,
  CYP_BASELINE_PEPIN = 1
} cyp_baseline;

typedef struct cyp_result cyp_result;

CYCLOPRIME_API const char* cyp_version(void);

/* Message for the last failed call on this thread; "" if none. */
CYCLOPRIME_API const char* cyp_last_error(void);

CYCLOPRIME_API int cyp_is_supported_prime(int p);

/* Decimal digit count of (2p)^(2^n) + 1. */
CYCLOPRIME_API cyp_status cyp_modulus_digits(int p, int n, size_t* digits);

CYCLOPRIME_API cyp_status cyp_test(int p, int n, cyp_mode mode, cyp_result** out);

/* index is the Mersenne exponent for Lucas-Lehmer and n for Pepin. */
CYCLOPRIME_API cyp_status cyp_baseline_run(cyp_baseline kind, int index, cyp_result** out);

CYCLOPRIME_API void cyp_result_free(cyp_result* result);

CYCLOPRIME_API cyp_outcome cyp_result_outcome(const cyp_result* result);
CYCLOPRIME_API double cyp_result_elapsed(const cyp_result* result);
CYCLOPRIME_API const char* cyp_result_mode(const cyp_result* result);
/* Single-line JSON report. */
CYCLOPRIME_API const char* cyp_result_json(const cyp_result* result);
CYCLOPRIME_API const char* cyp_result_summary(const cyp_result* result);
/* Final S-vector, when the run reached it; size 0 otherwise. */
CYCLOPRIME_API size_t cyp_result_sequence_size(const cyp_result* result);
CYCLOPRIME_API const char* cyp_result_sequence_value(const cyp_result* result, size_t index);

/* Miller-Rabin on (2p)^(2^n) + 1. *probably_prime is set to 1 or 0. */
CYCLOPRIME_API cyp_status cyp_oracle(int p, int n, unsigned rounds, uint64_t seed,
                                     int* probably_prime);
/* Miller-Rabin on a decimal integer >= 3. */
CYCLOPRIME_API cyp_status cyp_oracle_decimal(const char* number, unsigned rounds, uint64_t seed,
                                             int* probably_prime);

#ifdef __cplusplus
}
#endif

#endif /* CYCLOPRIME_H_ */
