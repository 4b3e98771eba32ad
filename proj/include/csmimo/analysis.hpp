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

#include "csmimo/csmux.hpp"
#include "csmimo/dictionary.hpp"
#include "csmimo/types.hpp"

#include <cstdint>

namespace csmimo {

struct SparkOptions {
  std::size_t max_columns = 20;
  /// Dependence threshold relative to the largest singular value of the
  /// whole matrix.
  double tolerance = 1e-10;
};

/// Smallest number of linearly dependent columns, by enumeration of column
/// subsets in increasing size. Returns cols + 1 when every subset is
/// independent. Throws Errc::too_many_columns above opts.max_columns.
int spark(const RMatrix& a, const SparkOptions& opts = {});
int spark(const CMatrix& a, const SparkOptions& opts = {});

struct RipOptions {
  bool normalize_columns = true;
  /// Exhaustive when C(cols, k) does not exceed this, otherwise sampled.
  std::size_t enumeration_cap = 2'000'000;
  std::size_t samples = 20'000;
  std::uint64_t seed = 0;
};

struct RipEstimate {
  int k = 0;
  double delta_k = 0.0;
  bool exhaustive = true;
  std::size_t supports = 0;
};

/// delta_k = max over supports S of max(1 - lambda_min, lambda_max - 1) with
/// lambda the eigenvalues of A_S^H A_S.
RipEstimate rip_constant(const CMatrix& a, int k, const RipOptions& opts = {});
RipEstimate rip_constant(const RMatrix& a, int k, const RipOptions& opts = {});

struct UniquenessReport {
  bool unique = false;
  double min_distance = 0.0;
  std::size_t first = 0;
  std::size_t second = 0;
  std::size_t columns = 0;
};

inline constexpr std::size_t kUniquenessMaxColumns = 4096;

/// Pairwise scan of the columns of Phi*Psi. Distinct columns mean spark > 2,
/// so every 1-sparse solution is the unique sparsest one.
UniquenessReport verify_uniqueness(const MeasurementMatrix& phi, const SubblockDictionary& dict);
UniquenessReport verify_uniqueness(const CMatrix& sensing);

/// Order-k isometry constants of a dictionary, of Phi applied to it, and of
/// Phi restricted to the spans of k dictionary columns (delta_embed). The
/// composed constant is bounded by
/// delta_dict + delta_embed * (1 + delta_dict). All constants are on raw
/// column scale; pass a dictionary with unit-norm columns.
struct CompositionCheck {
  double delta_dict = 0.0;
  double delta_composed = 0.0;
  double delta_embed = 0.0;
  double bound = 0.0;
  bool holds = false;
};

CompositionCheck composition_check(const RMatrix& phi, const CMatrix& psi, int k);

}  // namespace csmimo
