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

#include "csmimo/channel.hpp"

#include "csmimo/error.hpp"

#include <cmath>
#include <limits>

namespace csmimo {

NoiseSpec NoiseSpec::from_snr_db(double snr_db, double rx_energy) {
  if (std::isinf(snr_db) && snr_db > 0) return {snr_db, 0.0};
  return {snr_db, rx_energy / std::pow(10.0, snr_db / 10.0)};
}

NoiseSpec NoiseSpec::noiseless() { return {std::numeric_limits<double>::infinity(), 0.0}; }

ChannelRealization sample_channel(int nr, int m_tx, Rng& rng) {
  if (nr < 1 || m_tx < 1) throw Error(Errc::invalid_argument, "channel dimensions must be positive");
  ChannelRealization out{CMatrix(nr, m_tx)};
  // column-major fill; the draw order is part of the reproducibility contract
  for (Eigen::Index c = 0; c < out.h.cols(); ++c)
    for (Eigen::Index r = 0; r < out.h.rows(); ++r) out.h(r, c) = complex_normal(rng, 1.0);
  return out;
}

CVector apply_channel(const ChannelRealization& h, const CVector& z, const NoiseSpec& noise, Rng& rng) {
  if (z.size() != h.h.cols())
    throw Error(Errc::dimension_mismatch, "transmit vector length " + std::to_string(z.size()) +
                                              " does not match channel width " + std::to_string(h.h.cols()));
  CVector y = h.h * z;
  if (noise.sigma2 > 0.0)
    for (Eigen::Index r = 0; r < y.size(); ++r) y(r) += complex_normal(rng, noise.sigma2);
  return y;
}

RMatrix realify(const CMatrix& a) {
  const Eigen::Index n = a.rows(), m = a.cols();
  RMatrix out(2 * n, 2 * m);
  out.topLeftCorner(n, m) = a.real();
  out.topRightCorner(n, m) = -a.imag();
  out.bottomLeftCorner(n, m) = a.imag();
  out.bottomRightCorner(n, m) = a.real();
  return out;
}

RVector realify(const CVector& v) {
  RVector out(2 * v.size());
  out.head(v.size()) = v.real();
  out.tail(v.size()) = v.imag();
  return out;
}

}  // namespace csmimo
