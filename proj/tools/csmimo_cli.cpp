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

// Command-line front end. Talks to the simulator only through the C API.

#include "csmimo/csmimo.h"

#include <CLI11.hpp>

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace {

struct Experiment {
  csm_experiment* ptr = nullptr;
  ~Experiment() { csm_experiment_free(ptr); }
};

struct Result {
  csm_result* ptr = nullptr;
  ~Result() { csm_result_free(ptr); }
};

bool check(csm_status status, const char* what) {
  if (status == CSM_OK) return true;
  std::fprintf(stderr, "error: %s: %s", what, csm_status_string(status));
  const char* detail = csm_last_error();
  if (detail && *detail) std::fprintf(stderr, " (%s)", detail);
  std::fputc('\n', stderr);
  return false;
}

struct SimulateArgs {
  std::string config;
  std::optional<std::string> snr;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> phi_seed;
  std::optional<std::uint64_t> min_errors;
  std::optional<std::string> solver;
  std::optional<std::string> baseline;
  unsigned threads = 0;
  std::string out;
  bool quiet = false;
};

struct AnalyzeArgs {
  std::string config;
  std::optional<std::uint64_t> phi_seed;
  std::optional<std::string> dump_phi;
};

int run_simulate(const SimulateArgs& a) {
  Experiment exp;
  if (!check(csm_experiment_from_file(a.config.c_str(), &exp.ptr), "loading config")) return 2;
  if (a.snr && !check(csm_experiment_set_snr_range(exp.ptr, a.snr->c_str()), "--snr")) return 2;
  if (a.trials && !check(csm_experiment_set_trials(exp.ptr, *a.trials), "--trials")) return 2;
  if (a.seed && !check(csm_experiment_set_seed(exp.ptr, *a.seed), "--seed")) return 2;
  if (a.phi_seed && !check(csm_experiment_set_phi_seed(exp.ptr, *a.phi_seed), "--phi-seed")) return 2;
  if (a.min_errors && !check(csm_experiment_set_min_errors(exp.ptr, *a.min_errors), "--min-errors")) return 2;
  if (a.solver && !check(csm_experiment_set_solver(exp.ptr, a.solver->c_str()), "--solver")) return 2;
  if (a.baseline && !check(csm_experiment_set_baseline(exp.ptr, a.baseline->c_str()), "--baseline")) return 2;
  csm_experiment_set_threads(exp.ptr, a.threads);

  Result res;
  if (!check(csm_run_sweep(exp.ptr, &res.ptr), "simulation")) return 1;
  if (!check(csm_result_write_csv(res.ptr, a.out.c_str()), "writing CSV")) return 1;

  if (!a.quiet) {
    char notation[64];
    csm_experiment_notation(exp.ptr, notation, sizeof notation);
    std::printf("%s  streams/use=%d\n", notation, csm_experiment_streams_per_use(exp.ptr));
    std::printf("%8s %10s %14s %14s %12s\n", "snr_db", "trials", "ber", "ser", "throughput");
    for (size_t i = 0; i < csm_result_row_count(res.ptr); ++i) {
      csm_sweep_row row{};
      csm_result_row(res.ptr, i, &row);
      std::printf("%8g %10llu %14.6e %14.6e %12.4f\n", row.snr_db, static_cast<unsigned long long>(row.trials),
                  row.ber, row.ser, row.throughput);
    }
    std::printf("wrote %s\n", a.out.c_str());
  }
  return 0;
}

int run_analyze(const AnalyzeArgs& a) {
  Experiment exp;
  if (!check(csm_experiment_from_file(a.config.c_str(), &exp.ptr), "loading config")) return 2;
  if (a.phi_seed && !check(csm_experiment_set_phi_seed(exp.ptr, *a.phi_seed), "--phi-seed")) return 2;
  size_t needed = 0;
  if (!check(csm_analyze(exp.ptr, nullptr, 0, &needed), "analysis")) return 1;
  std::vector<char> buf(needed);
  if (!check(csm_analyze(exp.ptr, buf.data(), buf.size(), &needed), "analysis")) return 1;
  std::fputs(buf.data(), stdout);
  if (a.dump_phi && !check(csm_dump_phi(exp.ptr, a.dump_phi->c_str()), "--dump-phi")) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compressive-sensing MIMO multiplexing link simulator"};
  app.set_version_flag("--version", std::string(csm_version()));
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo BER/SER sweep, written as CSV");
  simulate->add_option("--config", sim.config, "Experiment config (JSON)")->required()->check(CLI::ExistingFile);
  simulate->add_option("--snr", sim.snr, "SNR grid in dB, start:step:stop");
  simulate->add_option("--trials", sim.trials, "Maximum trials per SNR point");
  simulate->add_option("--seed", sim.seed, "Master seed");
  simulate->add_option("--phi-seed", sim.phi_seed, "Measurement matrix seed");
  simulate->add_option("--min-errors", sim.min_errors, "Early stop after this many bit errors (0 = never)");
  simulate->add_option("--solver", sim.solver, "Sparse recovery solver")
      ->check(CLI::IsMember({"ml", "omp", "oneshot"}));
  simulate->add_option("--baseline", sim.baseline, "Run a baseline instead of the CS scheme")
      ->check(CLI::IsMember({"none", "zf", "overload"}));
  simulate->add_option("--threads", sim.threads, "Worker threads (0 = all cores)");
  simulate->add_option("--out", sim.out, "Output CSV path")->required();
  simulate->add_flag("-q,--quiet", sim.quiet, "Do not print the summary table");

  AnalyzeArgs ana;
  auto* analyze = app.add_subcommand("analyze", "Spark, RIP and uniqueness diagnostics");
  analyze->add_option("--config", ana.config, "Experiment config (JSON)")->required()->check(CLI::ExistingFile);
  analyze->add_option("--phi-seed", ana.phi_seed, "Measurement matrix seed");
  analyze->add_option("--dump-phi", ana.dump_phi, "Write the measurement matrix to this file");

  CLI11_PARSE(app, argc, argv);

  if (simulate->parsed()) return run_simulate(sim);
  if (analyze->parsed()) return run_analyze(ana);
  return 0;
}
