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

#include "csmimo/harness.hpp"

#include "csmimo/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <ostream>
#include <thread>

namespace csmimo {

namespace {

constexpr std::uint64_t kBatch = 1024;
constexpr std::uint64_t kMaxRedraws = 1000;

Bits random_bits(std::size_t count, Rng& rng) {
  Bits out(count);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (i % 64 == 0) word = rng();
    out[i] = static_cast<std::uint8_t>((word >> (i % 64)) & 1u);
  }
  return out;
}

TrialRecord count_errors(const Bits& tx, const Bits& rx, int bits_per_symbol) {
  TrialRecord rec;
  const auto bps = static_cast<std::size_t>(bits_per_symbol);
  rec.bits = tx.size();
  rec.symbols = tx.size() / bps;
  for (std::size_t s = 0; s < rec.symbols; ++s) {
    bool wrong = false;
    for (std::size_t b = 0; b < bps; ++b) {
      if (tx[s * bps + b] != rx[s * bps + b]) {
        ++rec.bit_errors;
        wrong = true;
      }
    }
    if (wrong) ++rec.symbol_errors;
  }
  return rec;
}

void append_number(std::ostream& os, double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  os.write(buf, res.ptr - buf);
}

}  // namespace

Baseline parse_baseline(std::string_view name) {
  if (name == "none" || name == "cs") return Baseline::none;
  if (name == "zf") return Baseline::zf;
  if (name == "overload") return Baseline::overload;
  throw Error(Errc::invalid_config, "unknown baseline '" + std::string(name) + "'");
}

const char* to_string(Baseline b) noexcept {
  switch (b) {
    case Baseline::none: return "none";
    case Baseline::zf: return "zf";
    case Baseline::overload: return "overload";
  }
  return "?";
}

void ExperimentSpec::validate() const {
  if (trials < 1) throw Error(Errc::invalid_config, "trials must be >= 1");
  if (snr_db.empty()) throw Error(Errc::invalid_config, "SNR grid is empty");
  for (double s : snr_db)
    if (std::isnan(s) || (std::isinf(s) && s < 0)) throw Error(Errc::invalid_config, "invalid SNR value");
  if (omp.k_max < 1) throw Error(Errc::invalid_config, "omp_k_max must be >= 1");
  const Constellation c = Constellation::by_name(constellation);
  if (baseline == Baseline::none)
    mux.validate(c.size());
  else
    mux.validate_shape();
}

int ExperimentSpec::streams_per_use() const { return baseline == Baseline::zf ? mux.m() : mux.l; }

Interval wilson_interval(std::uint64_t errors, std::uint64_t n) {
  if (n == 0) return {0.0, 1.0};
  constexpr double z = 1.959963984540054;
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(errors) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (p + z2 / (2.0 * nn)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
  const double low = errors == 0 ? 0.0 : std::max(0.0, center - half);
  const double high = errors == n ? 1.0 : std::min(1.0, center + half);
  return {low, high};
}

double throughput_proxy(double ser, const ExperimentSpec& spec) {
  const int bps = Constellation::by_name(spec.constellation).bits_per_symbol();
  return static_cast<double>(spec.streams_per_use()) * bps * (1.0 - ser);
}

Experiment::Experiment(ExperimentSpec spec)
    : spec_((spec.validate(), std::move(spec))), constellation_(Constellation::by_name(spec_.constellation)) {
  if (spec_.baseline == Baseline::none)
    demux_.emplace(spec_.mux, gen_phi(spec_.mux),
                   SubblockDictionary::build(constellation_, spec_.mux.block_len(), spec_.mux.dictionary_cap),
                   spec_.solver, spec_.omp);
}

Experiment::Experiment(ExperimentSpec spec, MeasurementMatrix phi)
    : spec_((spec.validate(), std::move(spec))), constellation_(Constellation::by_name(spec_.constellation)) {
  if (spec_.baseline != Baseline::none)
    throw Error(Errc::invalid_config, "a measurement matrix only applies to the CS scheme");
  demux_.emplace(spec_.mux, std::move(phi),
                 SubblockDictionary::build(constellation_, spec_.mux.block_len(), spec_.mux.dictionary_cap),
                 spec_.solver, spec_.omp);
}

TrialOutcome Experiment::trial_cs(const NoiseSpec& noise, Rng& rng) const {
  const MuxConfig& cfg = spec_.mux;
  const Demultiplexer& dm = *demux_;
  TrialOutcome out;
  out.tx = random_bits(static_cast<std::size_t>(cfg.l * constellation_.bits_per_symbol()), rng);
  const CVector x = modulate(out.tx, constellation_);
  const CVector z = multiplex(x, dm.phi(), cfg);
  std::uint64_t redraws = 0;
  for (;;) {
    const ChannelRealization h = sample_channel(cfg.nr, cfg.m(), rng);
    const CVector y = apply_channel(h, z, noise, rng);
    try {
      out.rx = demodulate(dm.demux(y, h).x_hat, constellation_);
      break;
    } catch (const Error& e) {
      if (e.code() != Errc::rank_deficient_channel || ++redraws > kMaxRedraws) throw;
    }
  }
  out.record = count_errors(out.tx, out.rx, constellation_.bits_per_symbol());
  out.record.redraws = redraws;
  return out;
}

TrialOutcome Experiment::trial_direct(const NoiseSpec& noise, Rng& rng, int streams) const {
  const MuxConfig& cfg = spec_.mux;
  TrialOutcome out;
  out.tx = random_bits(static_cast<std::size_t>(streams * constellation_.bits_per_symbol()), rng);
  CVector x = modulate(out.tx, constellation_);
  // same total transmit energy as M unit-energy spatial streams
  const double amp = std::sqrt(static_cast<double>(cfg.m()) / static_cast<double>(streams));
  if (amp != 1.0) x *= amp;
  std::uint64_t redraws = 0;
  CVector x_hat;
  for (;;) {
    const ChannelRealization h = sample_channel(cfg.nr, streams, rng);
    const CVector y = apply_channel(h, x, noise, rng);
    if (streams > cfg.nr) {
      // underdetermined: minimum-norm least squares
      Eigen::JacobiSVD<CMatrix> svd(h.h, Eigen::ComputeThinU | Eigen::ComputeThinV);
      x_hat = svd.solve(y) / amp;
      break;
    }
    try {
      x_hat = zf_equalize(y, h, amp).z_hat;
      break;
    } catch (const Error& e) {
      if (e.code() != Errc::rank_deficient_channel || ++redraws > kMaxRedraws) throw;
    }
  }
  out.rx = demodulate(x_hat, constellation_);
  out.record = count_errors(out.tx, out.rx, constellation_.bits_per_symbol());
  out.record.redraws = redraws;
  return out;
}

TrialOutcome Experiment::run_trial_detail(double snr_db, std::uint64_t trial_index) const {
  Rng rng = trial_stream(spec_.master_seed, trial_index);
  const NoiseSpec noise = NoiseSpec::from_snr_db(snr_db, static_cast<double>(spec_.mux.m()));
  switch (spec_.baseline) {
    case Baseline::none: return trial_cs(noise, rng);
    case Baseline::zf: return trial_direct(noise, rng, spec_.mux.m());
    case Baseline::overload: return trial_direct(noise, rng, spec_.mux.l);
  }
  throw Error(Errc::invalid_config, "unknown scheme");
}

TrialRecord Experiment::run_trial(double snr_db, std::uint64_t trial_index) const {
  return run_trial_detail(snr_db, trial_index).record;
}

SweepResult Experiment::run_sweep(unsigned threads) const {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  SweepResult result;
  result.notation = spec_.notation();
  result.scheme = spec_.baseline == Baseline::none ? "cs" : to_string(spec_.baseline);
  result.constellation = constellation_.name();
  result.solver = spec_.baseline == Baseline::none ? to_string(spec_.solver) : "zf";
  result.streams_per_use = spec_.streams_per_use();
  result.spatial_streams = spec_.mux.m();
  result.master_seed = spec_.master_seed;
  result.phi_seed = spec_.mux.phi_seed;

  std::vector<double> grid = spec_.snr_db;
  std::sort(grid.begin(), grid.end());

  std::vector<TrialRecord> batch(kBatch);
  for (double snr : grid) {
    SweepRow row;
    row.snr_db = snr;
    bool stop = false;
    for (std::uint64_t next = 0; next < spec_.trials && !stop; next += kBatch) {
      const std::uint64_t count = std::min(kBatch, spec_.trials - next);
      const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, count));
      auto work = [&](unsigned w) {
        for (std::uint64_t i = w; i < count; i += workers) batch[i] = run_trial(snr, next + i);
      };
      if (workers <= 1) {
        work(0);
      } else {
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
          pool.emplace_back([&, w] {
            try {
              work(w);
            } catch (...) {
              errors[w] = std::current_exception();
            }
          });
        for (auto& t : pool) t.join();
        for (auto& e : errors)
          if (e) std::rethrow_exception(e);
      }
      // ordered reduction; early stop is decided per trial index
      for (std::uint64_t i = 0; i < count; ++i) {
        const TrialRecord& r = batch[i];
        ++row.trials;
        row.bits += r.bits;
        row.bit_errors += r.bit_errors;
        row.symbol_errors += r.symbol_errors;
        row.redraws += r.redraws;
        if (spec_.min_errors > 0 && row.bit_errors >= spec_.min_errors) {
          stop = true;
          break;
        }
      }
    }
    const std::uint64_t symbols = row.trials * static_cast<std::uint64_t>(result.streams_per_use);
    row.ber = row.bits ? static_cast<double>(row.bit_errors) / static_cast<double>(row.bits) : 0.0;
    row.ser = symbols ? static_cast<double>(row.symbol_errors) / static_cast<double>(symbols) : 0.0;
    row.throughput = throughput_proxy(row.ser, spec_);
    const Interval ci = wilson_interval(row.bit_errors, row.bits);
    row.ci_low = ci.low;
    row.ci_high = ci.high;
    result.rows.push_back(row);
  }
  return result;
}

TrialRecord run_trial(const ExperimentSpec& spec, double snr_db, std::uint64_t trial_index) {
  return Experiment(spec).run_trial(snr_db, trial_index);
}

SweepResult run_sweep(const ExperimentSpec& spec, unsigned threads) { return Experiment(spec).run_sweep(threads); }

SweepResult run_baseline_overload(ExperimentSpec spec, unsigned threads) {
  spec.baseline = Baseline::overload;
  return Experiment(std::move(spec)).run_sweep(threads);
}

void write_csv(std::ostream& os, const SweepResult& result) {
  std::uint64_t redraws = 0;
  for (const auto& r : result.rows) redraws += r.redraws;
  os << "# notation: " << result.notation << '\n'
     << "# scheme: " << result.scheme << '\n'
     << "# constellation: " << result.constellation << '\n'
     << "# solver: " << result.solver << '\n'
     << "# streams_per_channel_use: " << result.streams_per_use << '\n'
     << "# spatial_streams: " << result.spatial_streams << '\n'
     << "# master_seed: " << result.master_seed << '\n'
     << "# phi_seed: " << result.phi_seed << '\n'
     << "# snr_db: mean received signal energy per receive antenna over complex noise variance per antenna;"
        " total transmit energy equals spatial_streams\n"
     << "# ber_ci: Wilson score interval, 95%\n"
     << "# throughput: proxy, streams_per_channel_use * bits_per_symbol * (1 - ser) bits per channel use\n"
     << "# channel_redraws: " << redraws << '\n'
     << kCsvHeader << '\n';
  for (const auto& r : result.rows) {
    append_number(os, r.snr_db);
    os << ',' << r.trials << ',' << r.bits << ',' << r.bit_errors << ',';
    append_number(os, r.ber);
    os << ',' << r.symbol_errors << ',';
    append_number(os, r.ser);
    os << ',';
    append_number(os, r.throughput);
    os << ',';
    append_number(os, r.ci_low);
    os << ',';
    append_number(os, r.ci_high);
    os << '\n';
  }
}

}  // namespace csmimo
