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
#include "csmimo/modem.hpp"
#include "csmimo/types.hpp"

namespace csmimo {

/// Exhaustive overcomplete dictionary for one sub-block of n symbols.
///
/// Column k holds the symbol tuple whose constellation indices t_i satisfy
/// k = sum_i t_i * |S|^i (position 0 is the least significant digit). Every
/// valid sub-block is exactly one column, so its representation is 1-sparse.
class SubblockDictionary {
 public:
  /// Throws Errc::dictionary_too_large when |S|^n exceeds cap.
  static SubblockDictionary build(const Constellation& c, int n, std::size_t cap = kDefaultDictionaryCap);

  const CMatrix& psi() const noexcept { return psi_; }
  const Constellation& constellation() const noexcept { return constellation_; }
  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(psi_.cols()); }

  /// Column index of a constellation tuple (Errc::not_a_constellation_tuple,
  /// Errc::dimension_mismatch).
  std::size_t encode(const CVector& x) const;

  /// Column k (Errc::index_out_of_range).
  CVector decode(std::size_t k) const;

 private:
  SubblockDictionary(Constellation c, int n, CMatrix psi)
      : constellation_(std::move(c)), n_(n), psi_(std::move(psi)) {}

  Constellation constellation_;
  int n_ = 0;
  CMatrix psi_;
};

}  // namespace csmimo
