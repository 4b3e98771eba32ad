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

// Acceptance suite. Usage: acceptance [criterion]   (1..10, all when omitted)
// Prints one PASS/FAIL line per criterion; exit status is the number of failures.

#include "csmimo/analysis.hpp"
#include "csmimo/csmux.hpp"
#include "csmimo/detection.hpp"
#include "csmimo/dictionary.hpp"
#include "csmimo/harness.hpp"
#include "csmimo/modem.hpp"
#include "csmimo/rng.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace csmimo;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Verdict {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

ExperimentSpec reference_spec() {
  ExperimentSpec s;
  s.mux.nt = 4;
  s.mux.nr = 4;
  s.mux.l = 8;
  s.mux.j = 2;
  s.mux.phi_seed = 7;
  s.constellation = "qpsk";
  s.master_seed = 1;
  s.min_errors = 0;
  return s;
}

std::string csv_of(const SweepResult& r) {
  std::ostringstream os;
  write_csv(os, r);
  return os.str();
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, sep)) out.push_back(field);
  return out;
}

Verdict criterion1() {
  const auto t0 = Clock::now();
  auto spec = reference_spec();
  spec.snr_db = {kInf};
  spec.trials = 1000;
  const Experiment exp(spec);
  const auto uniq = verify_uniqueness(exp.demultiplexer().sensing());
  const auto r = exp.run_sweep(1);
  const double secs = seconds_since(t0);
  const auto& row = r.rows.at(0);
  const bool pass = uniq.unique && row.trials == 1000 && row.bit_errors == 0 && secs < 10.0;
  return {pass, fmt("unique=%d min_dist=%.4g trials=%llu bit_errors=%llu runtime=%.2fs", uniq.unique, uniq.min_distance,
                    static_cast<unsigned long long>(row.trials), static_cast<unsigned long long>(row.bit_errors), secs)};
}

Verdict criterion2() {
  ExperimentSpec cs;
  cs.mux.nt = 4;
  cs.mux.nr = 4;
  cs.mux.l = 4;
  cs.mux.j = 1;
  cs.master_seed = 2;
  cs.snr_db = {10};
  auto zf = cs;
  zf.baseline = Baseline::zf;
  const Experiment a(cs, MeasurementMatrix::identity(4));
  const Experiment b(zf);
  std::uint64_t mismatches = 0, errors = 0;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const auto ta = a.run_trial_detail(10.0, i);
    const auto tb = b.run_trial_detail(10.0, i);
    if (ta.tx != tb.tx || ta.rx != tb.rx) ++mismatches;
    errors += tb.record.bit_errors;
  }
  return {mismatches == 0 && cs.mux.rho() == 1.0,
          fmt("rho=%.3g trials=10000 decision_mismatches=%llu zf_bit_errors=%llu", cs.mux.rho(),
              static_cast<unsigned long long>(mismatches), static_cast<unsigned long long>(errors))};
}

Verdict criterion3() {
  Rng rng(3);
  std::normal_distribution<double> n01;
  int full = 0;
  for (int d = 0; d < 100; ++d) {
    RMatrix a(3, 6);
    for (auto& v : a.reshaped()) v = n01(rng);
    if (spark(a) == 4) ++full;
  }
  int agree = 0;
  for (int d = 0; d < 20; ++d) {
    RMatrix a(4, 8);
    for (auto& v : a.reshaped()) v = n01(rng);
    // plant a dependency in half the draws so lower sparks are exercised
    if (d % 2 == 1) a.col(d % 8) = a.col((d + 1) % 8) * 0.5 - a.col((d + 3) % 8);
    if (d % 4 == 3) a.col(7) = a.col(6) * -2.0;
    if (spark(a) == oracle::spark_by_rank(a)) ++agree;
  }
  return {full == 100 && agree == 20, fmt("spark=4 in %d/100 draws, oracle agreement %d/20", full, agree)};
}

Verdict criterion4() {
  Rng rng(4);
  std::normal_distribution<double> n01;
  CMatrix g(16, 16);
  for (auto& v : g.reshaped()) v = cplx(n01(rng), n01(rng));
  const CMatrix q = Eigen::HouseholderQR<CMatrix>(g).householderQ() * CMatrix::Identity(16, 10);
  double ortho = 0.0;
  for (int k = 1; k <= 4; ++k) ortho = std::max(ortho, rip_constant(q, k).delta_k);

  RMatrix a(16, 32);
  for (auto& v : a.reshaped()) v = n01(rng) / 4.0;
  RipOptions raw;
  raw.normalize_columns = false;
  const auto est = rip_constant(a, 2, raw);
  double expected = 0.0;
  for (int i = 0; i < 32; ++i)
    for (int j = i + 1; j < 32; ++j) {
      CMatrix sub(16, 2);
      sub.col(0) = a.col(i).cast<cplx>();
      sub.col(1) = a.col(j).cast<cplx>();
      expected = std::max(expected, oracle::svd_deviation(sub));
    }
  const double diff = std::abs(est.delta_k - expected);
  const bool pass = ortho <= 1e-10 && est.exhaustive && est.supports == 496 && diff <= 1e-9;
  return {pass, fmt("orthonormal max delta=%.3g, gaussian delta2=%.12f oracle=%.12f |diff|=%.3g supports=%zu", ortho,
                    est.delta_k, expected, diff, est.supports)};
}

Verdict criterion5() {
  const auto c = Constellation::by_name("qpsk");
  std::size_t cases = 0, mismatches = 0;
  for (int n : {1, 2, 4}) {
    const auto dict = SubblockDictionary::build(c, n);
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) total *= c.size();
    if (dict.size() != total) ++mismatches;
    // tuples enumerated independently of the codec, first position fastest
    for (std::size_t code = 0; code < total; ++code) {
      CVector t(n);
      std::size_t rest = code;
      for (int i = 0; i < n; ++i) {
        t(i) = c.point(rest % c.size());
        rest /= c.size();
      }
      ++cases;
      const std::size_t k = dict.encode(t);
      if (k != code || dict.decode(k) != t || dict.psi().col(static_cast<Eigen::Index>(k)) != t) ++mismatches;
    }
  }
  return {cases == 276 && mismatches == 0, fmt("cases=%zu mismatches=%zu", cases, mismatches)};
}

Verdict criterion6() {
  const auto c = Constellation::by_name("qpsk");
  const auto dict = SubblockDictionary::build(c, 4);
  MuxConfig cfg;
  cfg.nt = 4;
  cfg.nr = 4;
  cfg.l = 8;
  cfg.j = 2;
  Rng rng(6);
  std::uniform_int_distribution<std::size_t> pick(0, dict.size() - 1);
  std::uniform_real_distribution<double> snr(-5.0, 25.0);
  int agree = 0;
  const int instances = 10000;
  CMatrix sensing;
  for (int i = 0; i < instances; ++i) {
    if (i % 100 == 0) sensing = sensing_matrix(gen_phi(cfg, rng), dict);
    const double var = std::pow(10.0, -snr(rng) / 10.0);
    CVector z = sensing.col(static_cast<Eigen::Index>(pick(rng)));
    for (auto& v : z) v += complex_normal(rng, var);
    if (recover_subblock_ml(z, sensing).index == oracle::brute_force_ml(z, sensing)) ++agree;
  }
  return {agree == instances, fmt("index agreement %d/%d", agree, instances)};
}

Verdict criterion7() {
  const auto t0 = Clock::now();
  auto spec = reference_spec();
  spec.snr_db = {0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20, kInf};
  spec.trials = 20000;
  const auto r = run_sweep(spec, 0);
  const double secs = seconds_since(t0);
  bool monotone = true;
  for (std::size_t i = 0; i < r.rows.size(); ++i)
    for (std::size_t k = i + 1; k < r.rows.size(); ++k)
      if (r.rows[k].ber > r.rows[i].ber && r.rows[k].ci_low > r.rows[i].ci_high) monotone = false;
  const SweepRow& top = r.rows[r.rows.size() - 2];
  const SweepRow& clean = r.rows.back();
  const bool pass = monotone && top.snr_db == 20.0 && top.ber < 1e-2 && clean.ber == 0.0 && secs < 300.0;
  return {pass, fmt("non-increasing=%d ber@0dB=%.4g ber@20dB=%.4g (target < 1e-2) ber@noiseless=%.3g runtime=%.1fs",
                    monotone, r.rows.front().ber, top.ber, clean.ber, secs)};
}

Verdict criterion8() {
  auto spec = reference_spec();
  spec.snr_db = {20};
  spec.trials = 20000;
  const auto over = run_baseline_overload(spec, 0);
  const auto cs = run_sweep(spec, 0);
  const double ob = over.rows.at(0).ber, cb = cs.rows.at(0).ber;
  const double ratio = cb > 0.0 ? ob / cb : INFINITY;
  return {ob >= 0.2 && ratio >= 10.0,
          fmt("overload ber=%.4g (target >= 0.2) cs ber=%.4g ratio=%.3g (target >= 10)", ob, cb, ratio)};
}

Verdict criterion9() {
  ExperimentSpec s;
  s.mux.nt = 20;
  s.mux.nr = 20;
  s.mux.l = 40;
  s.mux.j = 10;
  s.mux.phi_seed = 7;
  s.snr_db = {kInf};
  s.trials = 20;
  s.min_errors = 0;
  auto plain = s;
  plain.baseline = Baseline::zf;

  auto inspect = [](const std::string& csv, int& streams, double& ser, double& throughput) {
    std::istringstream is(csv);
    std::string line;
    bool header = false;
    while (std::getline(is, line)) {
      if (line.rfind("# streams_per_channel_use: ", 0) == 0) streams = std::stoi(line.substr(27));
      if (line.empty() || line[0] == '#') continue;
      if (!header) {
        header = true;
        continue;
      }
      const auto f = split(line, ',');
      ser = std::stod(f.at(6));
      throughput = std::stod(f.at(7));
    }
  };
  int cs_streams = 0, zf_streams = 0;
  double cs_ser = 1, zf_ser = 1, cs_tp = 0, zf_tp = 0;
  inspect(csv_of(run_sweep(s, 0)), cs_streams, cs_ser, cs_tp);
  inspect(csv_of(run_sweep(plain, 0)), zf_streams, zf_ser, zf_tp);
  const bool arithmetic = throughput_proxy(0.0, s) == 80.0 && throughput_proxy(0.0, plain) == 40.0;
  const bool pass = cs_streams == 40 && zf_streams == 20 && cs_ser == 0.0 && zf_ser == 0.0 && cs_tp == 80.0 &&
                    zf_tp == 40.0 && arithmetic;
  return {pass, fmt("streams %d vs %d, throughput at SER=0: %.6g vs %.6g bits/use", cs_streams, zf_streams, cs_tp, zf_tp)};
}

Verdict criterion10() {
  auto spec = reference_spec();
  spec.snr_db = {0, 5, 10, 15, 20};
  spec.trials = 3000;
  spec.min_errors = 200;
  const std::string a = csv_of(Experiment(spec).run_sweep(1));
  const std::string b = csv_of(Experiment(spec).run_sweep(0));
  return {a == b && !a.empty(), fmt("csv bytes %zu vs %zu, identical=%d", a.size(), b.size(), a == b)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Verdict()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                          criterion6, criterion7, criterion8, criterion9, criterion10};
  int first = 1, last = static_cast<int>(criteria.size());
  if (argc > 1) {
    first = last = std::atoi(argv[1]);
    if (first < 1 || first > static_cast<int>(criteria.size())) {
      std::fprintf(stderr, "usage: %s [1-%zu]\n", argv[0], criteria.size());
      return 2;
    }
  }
  int failures = 0;
  for (int i = first; i <= last; ++i) {
    Verdict v;
    try {
      v = criteria[static_cast<std::size_t>(i - 1)]();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %d: %s  %s\n", i, v.pass ? "PASS" : "FAIL", v.detail.c_str());
    std::fflush(stdout);
    if (!v.pass) ++failures;
  }
  return failures;
}
