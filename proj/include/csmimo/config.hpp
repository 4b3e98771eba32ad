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

#include "csmimo/harness.hpp"

#include <filesystem>
#include <string_view>
#include <vector>

namespace csmimo {

/// Parses an experiment description in JSON. Unknown keys are rejected.
///
///   {
///     "nt": 4, "nr": 4, "l": 8, "j": 2,
///     "constellation": "qpsk",
///     "phi_seed": 7,
///     "snr_db": "0:2:20",          // or [0, 5, 10, "inf"]
///     "trials": 20000,
///     "min_errors": 200,
///     "master_seed": 1,
///     "solver": "ml",              // ml | omp | oneshot
///     "baseline": "none",          // none | zf | overload
///     "dictionary_cap": 65536,
///     "omp_k_max": 1,
///     "omp_tol": 1e-9,
///     "rho": 0.5                   // optional, must equal min(nt,nr)/l
///   }
ExperimentSpec parse_spec(std::string_view json_text);
ExperimentSpec load_spec(const std::filesystem::path& path);

/// "start:step:stop" (inclusive stop) or a single value; "inf" is accepted.
std::vector<double> parse_snr_range(std::string_view text);

}  // namespace csmimo
