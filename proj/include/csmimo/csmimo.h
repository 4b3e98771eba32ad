// SPDX-License-Identifier: Apache-2.0
//
// csmimo: compressive-sensing stream multiplexing for MIMO links
// Copyright (C) 2026 The csmimo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

/* C interface to the csmimo link simulator.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a csm_status; on
 * failure csm_last_error() describes the problem for the calling thread.
 */
#ifndef CSMIMO_CSMIMO_H
#define CSMIMO_CSMIMO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CSMIMO_BUILDING_LIBRARY)
#    define CSM_API __declspec(dllexport)
#  else
#    define CSM_API __declspec(dllimport)
#  endif
#else
#  define CSM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum csm_status {
  CSM_OK = 0,
  CSM_ERR_INVALID_ARGUMENT = 1,
  CSM_ERR_INVALID_CONFIG = 2,
  CSM_ERR_INDIVISIBLE_BIT_LENGTH = 3,
  CSM_ERR_DIMENSION_MISMATCH = 4,
  CSM_ERR_BAD_SUBBLOCK_SHAPE = 5,
  CSM_ERR_DICTIONARY_TOO_LARGE = 6,
  CSM_ERR_NOT_A_CONSTELLATION_TUPLE = 7,
  CSM_ERR_INDEX_OUT_OF_RANGE = 8,
  CSM_ERR_RANK_DEFICIENT_CHANNEL = 9,
  CSM_ERR_TOO_MANY_COLUMNS = 10,
  CSM_ERR_IO = 11,
  CSM_ERR_BUFFER_TOO_SMALL = 12,
  CSM_ERR_INTERNAL = 13
} csm_status;

typedef struct csm_experiment csm_experiment;
typedef struct csm_result csm_result;

typedef struct csm_sweep_row {
  double snr_db;
  uint64_t trials;
  uint64_t bits;
  uint64_t bit_errors;
  double ber;
  uint64_t symbol_errors;
  double ser;
  double throughput;
  double ci_low;
  double ci_high;
} csm_sweep_row;

CSM_API const char* csm_version(void);
CSM_API const char* csm_status_string(csm_status status);
/* Message of the last failed call on this thread; empty if none. */
CSM_API const char* csm_last_error(void);

CSM_API csm_status csm_experiment_from_file(const char* path, csm_experiment** out);
CSM_API csm_status csm_experiment_from_json(const char* json_text, csm_experiment** out);
CSM_API void csm_experiment_free(csm_experiment* exp);

/* Overrides; each re-validates the experiment. +INFINITY is the noiseless point. */
CSM_API csm_status csm_experiment_set_snr_grid(csm_experiment* exp, const double* snr_db, size_t count);
/* "start:step:stop" (inclusive) or a single value; "inf" allowed. */
CSM_API csm_status csm_experiment_set_snr_range(csm_experiment* exp, const char* range);
CSM_API csm_status csm_experiment_set_trials(csm_experiment* exp, uint64_t max_trials);
CSM_API csm_status csm_experiment_set_min_errors(csm_experiment* exp, uint64_t min_errors);
CSM_API csm_status csm_experiment_set_seed(csm_experiment* exp, uint64_t master_seed);
CSM_API csm_status csm_experiment_set_phi_seed(csm_experiment* exp, uint64_t phi_seed);
/* "ml", "omp" or "oneshot". */
CSM_API csm_status csm_experiment_set_solver(csm_experiment* exp, const char* solver);
/* "none", "zf" or "overload". */
CSM_API csm_status csm_experiment_set_baseline(csm_experiment* exp, const char* baseline);
/* 0 selects the hardware concurrency. Results do not depend on it. */
CSM_API csm_status csm_experiment_set_threads(csm_experiment* exp, unsigned threads);

/* "(Nt,Nr)-L" into buf, NUL-terminated. */
CSM_API csm_status csm_experiment_notation(const csm_experiment* exp, char* buf, size_t len);
CSM_API int csm_experiment_streams_per_use(const csm_experiment* exp);

CSM_API csm_status csm_run_sweep(const csm_experiment* exp, csm_result** out);
CSM_API void csm_result_free(csm_result* result);
CSM_API size_t csm_result_row_count(const csm_result* result);
CSM_API csm_status csm_result_row(const csm_result* result, size_t index, csm_sweep_row* out);
CSM_API csm_status csm_result_write_csv(const csm_result* result, const char* path);
/* Writes the CSV text into buf when it fits; *needed receives the size
 * including the terminating NUL either way. buf may be NULL when len is 0. */
CSM_API csm_status csm_result_csv(const csm_result* result, char* buf, size_t len, size_t* needed);

/* Diagnostics report ("key: value" lines), same buffer convention as csm_result_csv. */
CSM_API csm_status csm_analyze(const csm_experiment* exp, char* buf, size_t len, size_t* needed);
/* Writes the sub-block measurement matrix as plain-text rows. */
CSM_API csm_status csm_dump_phi(const csm_experiment* exp, const char* path);

#ifdef __cplusplus
}
#endif

#endif /* CSMIMO_CSMIMO_H */
