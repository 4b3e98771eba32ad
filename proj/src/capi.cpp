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

#include "csmimo/csmimo.h"

#include "csmimo/config.hpp"
#include "csmimo/error.hpp"
#include "csmimo/harness.hpp"
#include "csmimo/report.hpp"

#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

struct csm_experiment {
  csmimo::ExperimentSpec spec;
  unsigned threads = 0;
};

struct csm_result {
  csmimo::SweepResult sweep;
};

namespace {

thread_local std::string g_last_error;

csm_status to_status(csmimo::Errc code) {
  using csmimo::Errc;
  switch (code) {
    case Errc::invalid_argument: return CSM_ERR_INVALID_ARGUMENT;
    case Errc::invalid_config: return CSM_ERR_INVALID_CONFIG;
    case Errc::indivisible_bit_length: return CSM_ERR_INDIVISIBLE_BIT_LENGTH;
    case Errc::dimension_mismatch: return CSM_ERR_DIMENSION_MISMATCH;
    case Errc::bad_subblock_shape: return CSM_ERR_BAD_SUBBLOCK_SHAPE;
    case Errc::dictionary_too_large: return CSM_ERR_DICTIONARY_TOO_LARGE;
    case Errc::not_a_constellation_tuple: return CSM_ERR_NOT_A_CONSTELLATION_TUPLE;
    case Errc::index_out_of_range: return CSM_ERR_INDEX_OUT_OF_RANGE;
    case Errc::rank_deficient_channel: return CSM_ERR_RANK_DEFICIENT_CHANNEL;
    case Errc::too_many_columns: return CSM_ERR_TOO_MANY_COLUMNS;
    case Errc::io: return CSM_ERR_IO;
  }
  return CSM_ERR_INTERNAL;
}

csm_status fail(csm_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename Fn>
csm_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const csmimo::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CSM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CSM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CSM_ERR_INTERNAL, "unknown error");
  }
}

/// Applies `edit` to a copy of the ExperimentSpec and commits it only if it validates.
template <typename Edit>
csm_status update(csm_experiment* exp, Edit&& edit) {
  if (!exp) return fail(CSM_ERR_INVALID_ARGUMENT, "null experiment");
  return guarded([&] {
    csmimo::ExperimentSpec next = exp->spec;
    edit(next);
    next.validate();
    exp->spec = std::move(next);
    return CSM_OK;
  });
}

csm_status copy_out(const std::string& text, char* buf, size_t len, size_t* needed) {
  if (needed) *needed = text.size() + 1;
  if (!buf || len < text.size() + 1) {
    if (len == 0 && needed) return CSM_OK;
    return fail(CSM_ERR_BUFFER_TOO_SMALL, "buffer too small");
  }
  std::memcpy(buf, text.c_str(), text.size() + 1);
  return CSM_OK;
}

}  // namespace

extern "C" {

const char* csm_version(void) { return "0.1.0"; }

const char* csm_status_string(csm_status status) {
  switch (status) {
    case CSM_OK: return "ok";
    case CSM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CSM_ERR_INVALID_CONFIG: return "invalid configuration";
    case CSM_ERR_INDIVISIBLE_BIT_LENGTH: return "bit length not divisible by bits per symbol";
    case CSM_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case CSM_ERR_BAD_SUBBLOCK_SHAPE: return "sub-block count must divide streams and spatial streams";
    case CSM_ERR_DICTIONARY_TOO_LARGE: return "dictionary too large";
    case CSM_ERR_NOT_A_CONSTELLATION_TUPLE: return "not a constellation tuple";
    case CSM_ERR_INDEX_OUT_OF_RANGE: return "index out of range";
    case CSM_ERR_RANK_DEFICIENT_CHANNEL: return "rank deficient channel";
    case CSM_ERR_TOO_MANY_COLUMNS: return "too many columns";
    case CSM_ERR_IO: return "i/o error";
    case CSM_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case CSM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* csm_last_error(void) { return g_last_error.c_str(); }

csm_status csm_experiment_from_file(const char* path, csm_experiment** out) {
  if (!path || !out) return fail(CSM_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new csm_experiment{csmimo::load_spec(path)};
    return CSM_OK;
  });
}

csm_status csm_experiment_from_json(const char* json_text, csm_experiment** out) {
  if (!json_text || !out) return fail(CSM_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new csm_experiment{csmimo::parse_spec(json_text)};
    return CSM_OK;
  });
}

void csm_experiment_free(csm_experiment* exp) { delete exp; }

csm_status csm_experiment_set_snr_grid(csm_experiment* exp, const double* snr_db, size_t count) {
  if (count && !snr_db) return fail(CSM_ERR_INVALID_ARGUMENT, "null SNR array");
  return update(exp, [&](csmimo::ExperimentSpec& s) { s.snr_db.assign(snr_db, snr_db + count); });
}

csm_status csm_experiment_set_snr_range(csm_experiment* exp, const char* range) {
  if (!range) return fail(CSM_ERR_INVALID_ARGUMENT, "null SNR range");
  return update(exp, [&](csmimo::ExperimentSpec& s) { s.snr_db = csmimo::parse_snr_range(range); });
}

csm_status csm_experiment_set_trials(csm_experiment* exp, uint64_t max_trials) {
  return update(exp, [&](csmimo::ExperimentSpec& s) { s.trials = max_trials; });
}

csm_status csm_experiment_set_min_errors(csm_experiment* exp, uint64_t min_errors) {
  return update(exp, [&](csmimo::ExperimentSpec& s) { s.min_errors = min_errors; });
}

csm_status csm_experiment_set_seed(csm_experiment* exp, uint64_t master_seed) {
  return update(exp, [&](csmimo::ExperimentSpec& s) { s.master_seed = master_seed; });
}

csm_status csm_experiment_set_phi_seed(csm_experiment* exp, uint64_t phi_seed) {
  return update(exp, [&](csmimo::ExperimentSpec& s) { s.mux.phi_seed = phi_seed; });
}

csm_status csm_experiment_set_solver(csm_experiment* exp, const char* solver) {
  if (!solver) return fail(CSM_ERR_INVALID_ARGUMENT, "null solver");
  return update(exp, [&](csmimo::ExperimentSpec& s) { s.solver = csmimo::parse_solver(solver); });
}

csm_status csm_experiment_set_baseline(csm_experiment* exp, const char* baseline) {
  if (!baseline) return fail(CSM_ERR_INVALID_ARGUMENT, "null baseline");
  return update(exp, [&](csmimo::ExperimentSpec& s) { s.baseline = csmimo::parse_baseline(baseline); });
}

csm_status csm_experiment_set_threads(csm_experiment* exp, unsigned threads) {
  if (!exp) return fail(CSM_ERR_INVALID_ARGUMENT, "null experiment");
  exp->threads = threads;
  return CSM_OK;
}

csm_status csm_experiment_notation(const csm_experiment* exp, char* buf, size_t len) {
  if (!exp) return fail(CSM_ERR_INVALID_ARGUMENT, "null experiment");
  return guarded([&] { return copy_out(exp->spec.notation(), buf, len, nullptr); });
}

int csm_experiment_streams_per_use(const csm_experiment* exp) { return exp ? exp->spec.streams_per_use() : 0; }

csm_status csm_run_sweep(const csm_experiment* exp, csm_result** out) {
  if (!exp || !out) return fail(CSM_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new csm_result{csmimo::run_sweep(exp->spec, exp->threads)};
    return CSM_OK;
  });
}

void csm_result_free(csm_result* result) { delete result; }

size_t csm_result_row_count(const csm_result* result) { return result ? result->sweep.rows.size() : 0; }

csm_status csm_result_row(const csm_result* result, size_t index, csm_sweep_row* out) {
  if (!result || !out) return fail(CSM_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= result->sweep.rows.size()) return fail(CSM_ERR_INDEX_OUT_OF_RANGE, "row index out of range");
  const auto& r = result->sweep.rows[index];
  *out = csm_sweep_row{r.snr_db, r.trials, r.bits, r.bit_errors, r.ber, r.symbol_errors, r.ser, r.throughput,
                       r.ci_low, r.ci_high};
  return CSM_OK;
}

csm_status csm_result_write_csv(const csm_result* result, const char* path) {
  if (!result || !path) return fail(CSM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::ofstream os(path, std::ios::binary);
    if (!os) return fail(CSM_ERR_IO, std::string("cannot open ") + path);
    csmimo::write_csv(os, result->sweep);
    os.flush();
    if (!os) return fail(CSM_ERR_IO, std::string("write failed: ") + path);
    return CSM_OK;
  });
}

csm_status csm_result_csv(const csm_result* result, char* buf, size_t len, size_t* needed) {
  if (!result) return fail(CSM_ERR_INVALID_ARGUMENT, "null result");
  return guarded([&] {
    std::ostringstream os;
    csmimo::write_csv(os, result->sweep);
    return copy_out(os.str(), buf, len, needed);
  });
}

csm_status csm_analyze(const csm_experiment* exp, char* buf, size_t len, size_t* needed) {
  if (!exp) return fail(CSM_ERR_INVALID_ARGUMENT, "null experiment");
  return guarded([&] { return copy_out(csmimo::analysis_report(exp->spec), buf, len, needed); });
}

csm_status csm_dump_phi(const csm_experiment* exp, const char* path) {
  if (!exp || !path) return fail(CSM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::ofstream os(path, std::ios::binary);
    if (!os) return fail(CSM_ERR_IO, std::string("cannot open ") + path);
    csmimo::write_matrix(os, csmimo::gen_phi(exp->spec.mux).matrix());
    if (!os) return fail(CSM_ERR_IO, std::string("write failed: ") + path);
    return CSM_OK;
  });
}

}  // extern "C"
