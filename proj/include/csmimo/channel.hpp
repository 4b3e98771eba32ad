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

namespace csmimo {

/// Flat-fading channel matrix, receive antennas by transmitted streams.
struct ChannelRealization {
  CMatrix h;

  int nr() const noexcept { return static_cast<int>(h.rows()); }
  int m_tx() const noexcept { return static_cast<int>(h.cols()); }
};

/// Noise level derived from an SNR in dB.
///
/// SNR is the average received signal energy per receive antenna over the
/// complex noise variance per antenna. With unit-energy transmit streams and
/// unit-variance channel gains the received energy equals the stream count.
struct NoiseSpec {
  double snr_db = 0.0;
  double sigma2 = 0.0;

  static NoiseSpec from_snr_db(double snr_db, double rx_energy);
  static NoiseSpec noiseless();
};

/// I.i.d. CN(0,1) entries.
ChannelRealization sample_channel(int nr, int m_tx, Rng& rng);

/// h*z + v, v ~ CN(0, sigma2 I). Draws no noise samples when sigma2 == 0.
CVector apply_channel(const ChannelRealization& h, const CVector& z, const NoiseSpec& noise, Rng& rng);

/// Real-valued model: [[Re, -Im], [Im, Re]] for matrices, [Re; Im] for vectors.
RMatrix realify(const CMatrix& a);
RVector realify(const CVector& v);

}  // namespace csmimo
