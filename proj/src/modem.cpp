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

#include "csmimo/modem.hpp"

#include "csmimo/error.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace csmimo {

namespace {

std::vector<cplx> qpsk_points() {
  const double a = 1.0 / std::numbers::sqrt2;
  // labels 00, 01, 11, 10
  return {{a, a}, {a, -a}, {-a, -a}, {-a, a}};
}

std::vector<cplx> qam16_points() {
  // Per axis: first bit is the sign (0 -> +), second the magnitude (0 -> 1, 1 -> 3).
  // Bits b0 b1 drive the in-phase axis, b2 b3 the quadrature axis.
  const double a = 1.0 / std::sqrt(10.0);
  auto level = [](unsigned sign, unsigned mag) { return (sign ? -1.0 : 1.0) * (mag ? 3.0 : 1.0); };
  std::vector<cplx> pts(16);
  for (unsigned i = 0; i < 16; ++i) {
    const unsigned b0 = (i >> 3) & 1u, b1 = (i >> 2) & 1u, b2 = (i >> 1) & 1u, b3 = i & 1u;
    pts[i] = {a * level(b0, b1), a * level(b2, b3)};
  }
  return pts;
}

}  // namespace

Constellation::Constellation(std::string name, std::vector<cplx> points, std::vector<std::uint32_t> labels,
                             int bits)
    : name_(std::move(name)),
      points_(std::move(points)),
      labels_(std::move(labels)),
      index_of_label_(labels_.size()),
      bits_per_symbol_(bits) {
  for (std::size_t i = 0; i < labels_.size(); ++i) index_of_label_[labels_[i]] = i;
}

Constellation Constellation::by_name(std::string_view name) {
  if (name == "bpsk") return from_points("bpsk", {{1.0, 0.0}, {-1.0, 0.0}});
  if (name == "qpsk") return from_points("qpsk", qpsk_points(), {0b00, 0b01, 0b11, 0b10});
  if (name == "qam16") return from_points("qam16", qam16_points());
  throw Error(Errc::invalid_config, "unknown constellation '" + std::string(name) + "'");
}

Constellation Constellation::from_points(std::string name, std::vector<cplx> points) {
  std::vector<std::uint32_t> labels(points.size());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<std::uint32_t>(i);
  return from_points(std::move(name), std::move(points), std::move(labels));
}

Constellation Constellation::from_points(std::string name, std::vector<cplx> points,
                                         std::vector<std::uint32_t> labels) {
  const std::size_t n = points.size();
  if (n < 2 || !std::has_single_bit(n))
    throw Error(Errc::invalid_argument, "constellation size must be a power of two >= 2");
  double energy = 0.0;
  for (const auto& p : points) energy += std::norm(p);
  energy /= static_cast<double>(n);
  if (std::abs(energy - 1.0) > 1e-12)
    throw Error(Errc::invalid_argument, "constellation must have unit average energy");
  if (labels.size() != n) throw Error(Errc::invalid_argument, "one label per point required");
  std::vector<bool> seen(n, false);
  for (auto l : labels) {
    if (l >= n || seen[l]) throw Error(Errc::invalid_argument, "labels must be a permutation of 0..size-1");
    seen[l] = true;
  }
  const int bits = std::countr_zero(n);
  return Constellation(std::move(name), std::move(points), std::move(labels), bits);
}

std::size_t Constellation::nearest(cplx s) const noexcept {
  std::size_t best = 0;
  double best_d = std::norm(s - points_[0]);
  for (std::size_t i = 1; i < points_.size(); ++i) {
    const double d = std::norm(s - points_[i]);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

std::size_t Constellation::find(cplx s, double tol) const noexcept {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (std::abs(s - points_[i]) <= tol) return i;
  return points_.size();
}

std::vector<std::size_t> bits_to_indices(std::span<const std::uint8_t> bits, const Constellation& c) {
  const auto bps = static_cast<std::size_t>(c.bits_per_symbol());
  if (bits.size() % bps != 0)
    throw Error(Errc::indivisible_bit_length, "bit length " + std::to_string(bits.size()) +
                                                  " is not a multiple of " + std::to_string(bps));
  std::vector<std::size_t> idx(bits.size() / bps);
  for (std::size_t s = 0; s < idx.size(); ++s) {
    std::size_t v = 0;
    for (std::size_t b = 0; b < bps; ++b) v = (v << 1) | (bits[s * bps + b] & 1u);
    idx[s] = c.index_of_label(static_cast<std::uint32_t>(v));
  }
  return idx;
}

CVector modulate(std::span<const std::uint8_t> bits, const Constellation& c) {
  const auto idx = bits_to_indices(bits, c);
  CVector out(static_cast<Eigen::Index>(idx.size()));
  for (std::size_t s = 0; s < idx.size(); ++s) out(static_cast<Eigen::Index>(s)) = c.point(idx[s]);
  return out;
}

Bits demodulate(const CVector& symbols, const Constellation& c) {
  const auto bps = static_cast<std::size_t>(c.bits_per_symbol());
  Bits out(static_cast<std::size_t>(symbols.size()) * bps);
  for (Eigen::Index s = 0; s < symbols.size(); ++s) {
    const std::uint32_t k = c.label(c.nearest(symbols(s)));
    for (std::size_t b = 0; b < bps; ++b)
      out[static_cast<std::size_t>(s) * bps + b] = static_cast<std::uint8_t>((k >> (bps - 1 - b)) & 1u);
  }
  return out;
}

}  // namespace csmimo
