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

#include "csmimo/channel.hpp"
#include "csmimo/csmux.hpp"
#include "csmimo/dictionary.hpp"
#include "csmimo/types.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace csmimo {

struct EqualizerOutput {
  CVector z_hat;
  double condition_number = 1.0;
};

/// Singular values below this fraction of the largest make a channel
/// rank deficient.
inline constexpr double kRankTolerance = 1e-12;

/// Zero-forcing: z_hat = (H^H H)^{-1} H^H y / gain.
/// Throws Errc::rank_deficient_channel when H lacks full column rank.
EqualizerOutput zf_equalize(const CVector& y, const ChannelRealization& h, double gain = 1.0);

/// Phi * Psi, the sensing matrix seen by one post-equalisation sub-block.
CMatrix sensing_matrix(const MeasurementMatrix& phi, const SubblockDictionary& dict);

struct SubblockEstimate {
  std::size_t index = 0;
  double residual = 0.0;
};

/// Exact 1-sparse solution: argmin_k ||z - A e_k||, lowest k on ties.
SubblockEstimate recover_subblock_ml(const CVector& z, const CMatrix& sensing);
SubblockEstimate recover_subblock_ml(const CVector& z, const MeasurementMatrix& phi, const SubblockDictionary& dict);

struct OmpResult {
  std::vector<std::size_t> support;
  /// Least-squares weights of the raw (unnormalised) selected columns.
  CVector coefficients;
  double residual = 0.0;
};

/// Orthogonal matching pursuit. Atoms are picked by |<a_k, r>| / ||a_k||;
/// stops after k_max atoms or once ||r|| <= tol.
OmpResult recover_subblock_omp(const CVector& z, const CMatrix& sensing, int k_max, double tol);

enum class Solver { ml, omp, oneshot };

Solver parse_solver(std::string_view name);
const char* to_string(Solver s) noexcept;

struct OmpOptions {
  int k_max = 1;
  double tol = 1e-9;
};

struct RecoveryResult {
  /// Dominant dictionary column per sub-block.
  std::vector<std::size_t> s_index;
  CVector x_hat;
  std::vector<double> residual_norm;
};

/// Receiver chain for one configuration: equalisation followed by
/// per-sub-block sparse recovery. Immutable after construction.
///
/// - ml: zero-forcing, then minimum-residual column search on Phi*Psi.
/// - omp: zero-forcing, then OMP; x_hat is Psi times the OMP weights.
/// - oneshot: per sub-block search on the raw received vector with the
///   effective matrix H_j*Phi*Psi, after projecting out the streams of the
///   other sub-blocks. For J = 1 this is min ||y - H Phi Psi s||.
class Demultiplexer {
 public:
  Demultiplexer(MuxConfig cfg, MeasurementMatrix phi, SubblockDictionary dict, Solver solver,
                OmpOptions omp = {});

  RecoveryResult demux(const CVector& y, const ChannelRealization& h) const;

  const MuxConfig& config() const noexcept { return cfg_; }
  const MeasurementMatrix& phi() const noexcept { return phi_; }
  const SubblockDictionary& dictionary() const noexcept { return dict_; }
  const CMatrix& sensing() const noexcept { return sensing_; }
  Solver solver() const noexcept { return solver_; }

 private:
  RecoveryResult demux_two_step(const CVector& y, const ChannelRealization& h) const;
  RecoveryResult demux_oneshot(const CVector& y, const ChannelRealization& h) const;

  MuxConfig cfg_;
  MeasurementMatrix phi_;
  SubblockDictionary dict_;
  CMatrix sensing_;
  Solver solver_;
  OmpOptions omp_;
};

RecoveryResult demux(const CVector& y, const ChannelRealization& h, const MeasurementMatrix& phi,
                     const SubblockDictionary& dict, const MuxConfig& cfg, Solver solver);

}  // namespace csmimo
