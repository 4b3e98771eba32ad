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

#include "csmimo/dictionary.hpp"

#include "csmimo/error.hpp"

namespace csmimo {

SubblockDictionary SubblockDictionary::build(const Constellation& c, int n, std::size_t cap) {
  if (n < 1) throw Error(Errc::invalid_argument, "sub-block length must be >= 1");
  const std::size_t q = c.size();
  std::size_t d = 1;
  for (int i = 0; i < n; ++i) {
    if (d > cap / q)
      throw Error(Errc::dictionary_too_large,
                  "|S|^n = " + std::to_string(q) + "^" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    d *= q;
  }
  CMatrix psi(n, static_cast<Eigen::Index>(d));
  for (std::size_t k = 0; k < d; ++k) {
    std::size_t rest = k;
    for (int i = 0; i < n; ++i) {
      psi(i, static_cast<Eigen::Index>(k)) = c.point(rest % q);
      rest /= q;
    }
  }
  return SubblockDictionary(c, n, std::move(psi));
}

std::size_t SubblockDictionary::encode(const CVector& x) const {
  if (x.size() != n_)
    throw Error(Errc::dimension_mismatch,
                "sub-block length " + std::to_string(x.size()) + " != " + std::to_string(n_));
  const std::size_t q = constellation_.size();
  std::size_t k = 0;
  std::size_t weight = 1;
  for (int i = 0; i < n_; ++i) {
    const std::size_t t = constellation_.find(x(i));
    if (t == q)
      throw Error(Errc::not_a_constellation_tuple, "entry " + std::to_string(i) + " is not a constellation point");
    k += t * weight;
    weight *= q;
  }
  return k;
}

CVector SubblockDictionary::decode(std::size_t k) const {
  if (k >= size())
    throw Error(Errc::index_out_of_range,
                "dictionary index " + std::to_string(k) + " >= " + std::to_string(size()));
  return psi_.col(static_cast<Eigen::Index>(k));
}

}  // namespace csmimo
