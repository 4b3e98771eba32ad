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

// Test-only reference implementations. Each one takes a different numerical
// route from the library code it checks.

#include "csmimo/types.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using csmimo::CMatrix;
using csmimo::CVector;
using csmimo::cplx;
using csmimo::RMatrix;

/// Exhaustive minimum-residual scan with explicit scalar sums on real and
/// imaginary parts, lowest index on ties.
inline std::size_t brute_force_ml(const CVector& z, const CMatrix& a) {
  std::size_t best = 0;
  double best_r = INFINITY;
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    double r = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const double dr = z(i).real() - a(i, k).real();
      const double di = z(i).imag() - a(i, k).imag();
      r += dr * dr + di * di;
    }
    if (r < best_r) {
      best_r = r;
      best = static_cast<std::size_t>(k);
    }
  }
  return best;
}

/// Rank by Gaussian elimination with partial pivoting.
inline int gauss_rank(RMatrix m, double tol) {
  int rank = 0;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index piv = rank;
    for (Eigen::Index r = rank + 1; r < rows; ++r)
      if (std::abs(m(r, c)) > std::abs(m(piv, c))) piv = r;
    if (std::abs(m(piv, c)) <= tol) continue;
    m.row(piv).swap(m.row(rank));
    for (Eigen::Index r = rank + 1; r < rows; ++r) m.row(r) -= (m(r, c) / m(rank, c)) * m.row(rank);
    ++rank;
  }
  return rank;
}

/// Spark by bitmask enumeration: smallest popcount over dependent subsets.
inline int spark_by_rank(const RMatrix& a, double tol = 1e-9) {
  const auto cols = static_cast<int>(a.cols());
  int best = cols + 1;
  for (std::uint32_t mask = 1; mask < (1u << cols); ++mask) {
    const int size = std::popcount(mask);
    if (size >= best) continue;
    RMatrix sub(a.rows(), size);
    int c = 0;
    for (int i = 0; i < cols; ++i)
      if (mask & (1u << i)) sub.col(c++) = a.col(i);
    if (gauss_rank(sub, tol) < size) best = size;
  }
  return best;
}

/// Isometry deviation of one column subset from its singular values.
inline double svd_deviation(const CMatrix& sub) {
  Eigen::JacobiSVD<CMatrix> svd(sub);
  const auto& s = svd.singularValues();
  const double hi = s(0) * s(0);
  const double lo = s(s.size() - 1) * s(s.size() - 1);
  return std::max(1.0 - lo, hi - 1.0);
}

/// Dense block-diagonal operator diag(phi, ..., phi).
inline CMatrix block_diagonal(const RMatrix& phi, int blocks) {
  CMatrix out = CMatrix::Zero(phi.rows() * blocks, phi.cols() * blocks);
  for (int b = 0; b < blocks; ++b) out.block(b * phi.rows(), b * phi.cols(), phi.rows(), phi.cols()) = phi.cast<cplx>();
  return out;
}

/// Zero-forcing through the normal equations and an explicit inverse.
inline CVector zf_normal_equations(const CMatrix& h, const CVector& y) {
  const CMatrix gram = h.adjoint() * h;
  return gram.inverse() * (h.adjoint() * y);
}

/// Least squares on a fixed support through the normal equations.
inline CVector least_squares(const CMatrix& a, const CVector& z) {
  return (a.adjoint() * a).ldlt().solve(a.adjoint() * z);
}

}  // namespace oracle
