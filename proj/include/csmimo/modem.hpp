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

#include "csmimo/types.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace csmimo {

/// Finite modulation alphabet with unit average energy.
///
/// Each point carries a bit label, read most significant bit first. Named
/// alphabets are Gray-labelled. `qpsk` lists its points in label order
/// 00, 01, 11, 10: the first bit selects the sign of the real part and the
/// second the sign of the imaginary part (0 -> positive).
class Constellation {
 public:
  /// `bpsk`, `qpsk` or `qam16`.
  static Constellation by_name(std::string_view name);

  /// Validates size (power of two, >= 2) and unit average energy. Point i
  /// is labelled i.
  static Constellation from_points(std::string name, std::vector<cplx> points);
  /// As above with explicit labels, which must be a permutation of 0..size-1.
  static Constellation from_points(std::string name, std::vector<cplx> points, std::vector<std::uint32_t> labels);

  const std::string& name() const noexcept { return name_; }
  std::span<const cplx> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  int bits_per_symbol() const noexcept { return bits_per_symbol_; }
  const cplx& point(std::size_t index) const { return points_.at(index); }
  std::uint32_t label(std::size_t index) const { return labels_.at(index); }
  std::size_t index_of_label(std::uint32_t label) const { return index_of_label_.at(label); }

  /// Nearest point in Euclidean distance, lowest index on ties.
  std::size_t nearest(cplx s) const noexcept;

  /// Index of the point within `tol` of `s`, or size() if none.
  std::size_t find(cplx s, double tol = 1e-9) const noexcept;

 private:
  Constellation(std::string name, std::vector<cplx> points, std::vector<std::uint32_t> labels, int bits);

  std::string name_;
  std::vector<cplx> points_;
  std::vector<std::uint32_t> labels_;
  std::vector<std::size_t> index_of_label_;
  int bits_per_symbol_;
};

/// Throws Errc::indivisible_bit_length if bits.size() is not a multiple of
/// the constellation's bits per symbol.
CVector modulate(std::span<const std::uint8_t> bits, const Constellation& c);

/// Hard decision: nearest point per symbol, emitted as its label bits.
Bits demodulate(const CVector& symbols, const Constellation& c);

/// Point indices of a bit sequence, one per symbol (via the labels).
std::vector<std::size_t> bits_to_indices(std::span<const std::uint8_t> bits, const Constellation& c);

}  // namespace csmimo
