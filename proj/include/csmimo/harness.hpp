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

#pragma once

#include "csmimo/detection.hpp"
#include "csmimo/modem.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace csmimo {

/// What is transmitted per trial.
///  none     - the CS multiplexing scheme (L streams onto M spatial streams)
///  zf       - plain spatial multiplexing of M streams with ZF detection
///  overload - L streams sent directly, detected by minimum-norm least squares
enum class Baseline { none, zf, overload };

Baseline parse_baseline(std::string_view name);
const char* to_string(Baseline b) noexcept;

struct ExperimentSpec {
  MuxConfig mux;
  std::string constellation = "qpsk";
  /// +inf is the noiseless point.
  std::vector<double> snr_db;
  /// Maximum trials per SNR point.
  std::uint64_t trials = 1000;
  /// Stop an SNR point once this many bit errors accumulated; 0 disables.
  std::uint64_t min_errors = 200;
  std::uint64_t master_seed = 1;
  Solver solver = Solver::ml;
  Baseline baseline = Baseline::none;
  OmpOptions omp;

  /// Throws Errc::invalid_config / Errc::bad_subblock_shape /
  /// Errc::dictionary_too_large.
  void validate() const;
  std::string notation() const { return mux.notation(); }

  /// Modulated streams carried per channel use.
  int streams_per_use() const;
};

struct TrialRecord {
  std::uint64_t bits = 0;
  std::uint64_t bit_errors = 0;
  std::uint64_t symbols = 0;
  std::uint64_t symbol_errors = 0;
  /// Rank-deficient channel draws that were replaced.
  std::uint64_t redraws = 0;

  bool operator==(const TrialRecord&) const = default;
};

struct TrialOutcome {
  Bits tx;
  Bits rx;
  TrialRecord record;
};

struct SweepRow {
  double snr_db = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t bits = 0;
  std::uint64_t bit_errors = 0;
  double ber = 0.0;
  std::uint64_t symbol_errors = 0;
  double ser = 0.0;
  double throughput = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::uint64_t redraws = 0;
};

struct SweepResult {
  std::string notation;
  std::string scheme;
  std::string constellation;
  std::string solver;
  int streams_per_use = 0;
  int spatial_streams = 0;
  std::uint64_t master_seed = 0;
  std::uint64_t phi_seed = 0;
  std::vector<SweepRow> rows;
};

/// Wilson score interval at 95%.
struct Interval {
  double low;
  double high;
};
Interval wilson_interval(std::uint64_t errors, std::uint64_t n);

/// streams * log2|S| * (1 - SER) bits per channel use.
double throughput_proxy(double ser, const ExperimentSpec& spec);

/// Prepared simulation: constellation, measurement matrix, dictionary and
/// receiver built once and shared read-only by all trials.
class Experiment {
 public:
  explicit Experiment(ExperimentSpec spec);
  /// Injects a measurement matrix instead of drawing it from phi_seed.
  Experiment(ExperimentSpec spec, MeasurementMatrix phi);

  const ExperimentSpec& spec() const noexcept { return spec_; }
  const Constellation& constellation() const noexcept { return constellation_; }
  /// Only meaningful for Baseline::none.
  const Demultiplexer& demultiplexer() const { return *demux_; }

  /// Full transmit/receive chain for one trial. Depends only on
  /// (master_seed, trial_index) and the SNR.
  TrialOutcome run_trial_detail(double snr_db, std::uint64_t trial_index) const;
  TrialRecord run_trial(double snr_db, std::uint64_t trial_index) const;

  /// Trials run on `threads` workers (0 = hardware concurrency); the result is
  /// independent of the thread count.
  SweepResult run_sweep(unsigned threads = 0) const;

 private:
  TrialOutcome trial_cs(const NoiseSpec& noise, Rng& rng) const;
  TrialOutcome trial_direct(const NoiseSpec& noise, Rng& rng, int streams) const;

  ExperimentSpec spec_;
  Constellation constellation_;
  std::optional<Demultiplexer> demux_;
};

TrialRecord run_trial(const ExperimentSpec& spec, double snr_db, std::uint64_t trial_index);
SweepResult run_sweep(const ExperimentSpec& spec, unsigned threads = 0);

/// Sweep of the no-CS overload baseline for the same setup (requires L > M).
SweepResult run_baseline_overload(ExperimentSpec spec, unsigned threads = 0);

inline constexpr const char* kCsvHeader =
    "snr_db,trials,bits,bit_errors,ber,sym_errors,ser,throughput,ci_low,ci_high";

/// '#'-prefixed metadata lines, then the header row, then one row per SNR.
void write_csv(std::ostream& os, const SweepResult& result);

}  // namespace csmimo
