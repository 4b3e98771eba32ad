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

#include "csmimo/rng.hpp"
#include "csmimo/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace csmimo {

inline constexpr std::size_t kDefaultDictionaryCap = std::size_t{1} << 16;

/// Antenna and stream layout of one CS multiplexing setup.
///
/// L modulated streams are split into J consecutive sub-blocks of L/J
/// symbols; each sub-block is compressed onto M/J spatial streams, with
/// M = min(nt, nr).
struct MuxConfig {
  int nt = 0;
  int nr = 0;
  int l = 0;
  int j = 1;
  std::uint64_t phi_seed = 0;
  std::size_t dictionary_cap = kDefaultDictionaryCap;

  int m() const noexcept { return nt < nr ? nt : nr; }
  double rho() const noexcept { return static_cast<double>(m()) / static_cast<double>(l); }
  int block_len() const noexcept { return l / j; }
  int block_rows() const noexcept { return m() / j; }

  /// "(Nt,Nr)-L".
  std::string notation() const;

  /// Antenna counts, 0 < rho <= 1 and J | L, J | M.
  /// Throws Errc::invalid_config or Errc::bad_subblock_shape.
  void validate_shape() const;

  /// validate_shape() plus alphabet^(L/J) <= dictionary_cap
  /// (Errc::dictionary_too_large).
  void validate(std::size_t alphabet_size) const;
};

/// Real Gaussian matrix shared by every sub-block.
class MeasurementMatrix {
 public:
  MeasurementMatrix() = default;
  MeasurementMatrix(RMatrix phi, double scale);

  /// Square identity, used for the no-compression configuration.
  static MeasurementMatrix identity(int n);

  const RMatrix& matrix() const noexcept { return phi_; }
  int rows() const noexcept { return static_cast<int>(phi_.rows()); }
  int cols() const noexcept { return static_cast<int>(phi_.cols()); }

  /// Entry standard deviation the matrix was drawn with.
  double scale() const noexcept { return scale_; }

  /// Gain applied after multiplexing so that unit-energy i.i.d. symbols give
  /// unit expected energy per output stream: sqrt(rows / ||phi||_F^2).
  double tx_gain() const noexcept { return tx_gain_; }

 private:
  RMatrix phi_;
  double scale_ = 1.0;
  double tx_gain_ = 1.0;
};

/// Entries i.i.d. N(0, 1/(M/J)), drawn from cfg.phi_seed.
MeasurementMatrix gen_phi(const MuxConfig& cfg);
MeasurementMatrix gen_phi(const MuxConfig& cfg, Rng& rng);

/// Block-diagonal application of phi to consecutive sub-blocks of x, without
/// the power normalisation. Linear in x.
CVector multiplex_raw(const CVector& x, const MeasurementMatrix& phi, const MuxConfig& cfg);

/// multiplex_raw scaled by phi.tx_gain().
CVector multiplex(const CVector& x, const MeasurementMatrix& phi, const MuxConfig& cfg);

/// Plain-text dump: one row per line, space-separated decimals, row-major.
void write_matrix(std::ostream& os, const RMatrix& a);
RMatrix read_matrix(std::istream& is);

}  // namespace csmimo
