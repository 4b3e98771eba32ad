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

#include "csmimo/analysis.hpp"

#include "csmimo/detection.hpp"
#include "csmimo/error.hpp"
#include "csmimo/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace csmimo {

namespace {

/// Advances idx to the next k-combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<Eigen::Index>& idx, Eigen::Index n) {
  const auto k = static_cast<Eigen::Index>(idx.size());
  for (Eigen::Index i = k - 1; i >= 0; --i) {
    if (idx[static_cast<std::size_t>(i)] < n - k + i) {
      ++idx[static_cast<std::size_t>(i)];
      for (Eigen::Index t = i + 1; t < k; ++t)
        idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
      return true;
    }
  }
  return false;
}

/// C(n, k), saturating at the max of size_t.
std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double acc = 1.0L;
  for (std::size_t i = 1; i <= k; ++i) acc = acc * static_cast<long double>(n - k + i) / static_cast<long double>(i);
  if (acc >= static_cast<long double>(std::numeric_limits<std::size_t>::max())) return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(std::llround(acc));
}

template <typename Mat>
Mat select_columns(const Mat& a, const std::vector<Eigen::Index>& idx) {
  Mat out(a.rows(), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = a.col(idx[i]);
  return out;
}

template <typename Mat>
int spark_impl(const Mat& a, const SparkOptions& opts) {
  const Eigen::Index cols = a.cols();
  if (static_cast<std::size_t>(cols) > opts.max_columns)
    throw Error(Errc::too_many_columns, "spark enumeration limited to " + std::to_string(opts.max_columns) +
                                            " columns, got " + std::to_string(cols));
  if (cols == 0) return 1;
  const double smax = Eigen::JacobiSVD<Mat>(a).singularValues()(0);
  if (smax == 0.0) return 1;
  const double thr = opts.tolerance * smax;
  for (Eigen::Index size = 1; size <= cols; ++size) {
    if (size > a.rows()) return static_cast<int>(size);
    std::vector<Eigen::Index> idx(static_cast<std::size_t>(size));
    std::iota(idx.begin(), idx.end(), Eigen::Index{0});
    do {
      const Mat sub = select_columns(a, idx);
      const auto sv = Eigen::JacobiSVD<Mat>(sub).singularValues();
      if (sv(sv.size() - 1) <= thr) return static_cast<int>(size);
    } while (next_combination(idx, cols));
  }
  return static_cast<int>(cols) + 1;
}

/// Calls fn(support) over every k-subset of columns, or over opts.samples
/// random ones when the enumeration would exceed opts.enumeration_cap.
template <typename Fn>
std::pair<bool, std::size_t> for_each_support(Eigen::Index cols, int k, const RipOptions& opts, Fn&& fn) {
  const std::size_t total = binomial(static_cast<std::size_t>(cols), static_cast<std::size_t>(k));
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(k));
  if (total <= opts.enumeration_cap) {
    std::iota(idx.begin(), idx.end(), Eigen::Index{0});
    do fn(idx);
    while (next_combination(idx, cols));
    return {true, total};
  }
  Rng rng(opts.seed);
  std::vector<Eigen::Index> pool(static_cast<std::size_t>(cols));
  for (std::size_t s = 0; s < opts.samples; ++s) {
    std::iota(pool.begin(), pool.end(), Eigen::Index{0});
    for (int i = 0; i < k; ++i) {
      std::uniform_int_distribution<Eigen::Index> pick(i, cols - 1);
      std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(pick(rng))]);
    }
    std::copy_n(pool.begin(), k, idx.begin());
    std::sort(idx.begin(), idx.end());
    fn(idx);
  }
  return {false, opts.samples};
}

double isometry_deviation(const CMatrix& sub) {
  const CMatrix gram = sub.adjoint() * sub;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(gram, Eigen::EigenvaluesOnly);
  const RVector& ev = es.eigenvalues();
  const double lo = std::max(ev(0), 0.0);
  const double hi = ev(ev.size() - 1);
  return std::max(1.0 - lo, hi - 1.0);
}

}  // namespace

int spark(const RMatrix& a, const SparkOptions& opts) { return spark_impl(a, opts); }
int spark(const CMatrix& a, const SparkOptions& opts) { return spark_impl(a, opts); }

RipEstimate rip_constant(const CMatrix& a, int k, const RipOptions& opts) {
  if (k < 1 || k > a.cols())
    throw Error(Errc::invalid_argument, "RIP order must satisfy 1 <= k <= columns");
  CMatrix work = a;
  if (opts.normalize_columns) {
    for (Eigen::Index c = 0; c < work.cols(); ++c) {
      const double nrm = work.col(c).norm();
      if (nrm > 0.0) work.col(c) /= nrm;
    }
  }
  RipEstimate est;
  est.k = k;
  const auto [exhaustive, count] = for_each_support(work.cols(), k, opts, [&](const std::vector<Eigen::Index>& s) {
    est.delta_k = std::max(est.delta_k, isometry_deviation(select_columns(work, s)));
  });
  est.exhaustive = exhaustive;
  est.supports = count;
  return est;
}

RipEstimate rip_constant(const RMatrix& a, int k, const RipOptions& opts) {
  return rip_constant(CMatrix(a.cast<cplx>()), k, opts);
}

UniquenessReport verify_uniqueness(const CMatrix& sensing) {
  const auto d = static_cast<std::size_t>(sensing.cols());
  if (d > kUniquenessMaxColumns)
    throw Error(Errc::too_many_columns, "pairwise uniqueness scan limited to " +
                                            std::to_string(kUniquenessMaxColumns) + " columns");
  UniquenessReport rep;
  rep.columns = d;
  rep.min_distance = std::numeric_limits<double>::infinity();
  double scale = 0.0;
  for (Eigen::Index c = 0; c < sensing.cols(); ++c) scale = std::max(scale, sensing.col(c).norm());
  for (Eigen::Index i = 0; i < sensing.cols(); ++i) {
    for (Eigen::Index k = i + 1; k < sensing.cols(); ++k) {
      const double dist = (sensing.col(i) - sensing.col(k)).norm();
      if (dist < rep.min_distance) {
        rep.min_distance = dist;
        rep.first = static_cast<std::size_t>(i);
        rep.second = static_cast<std::size_t>(k);
      }
    }
  }
  rep.unique = d <= 1 || rep.min_distance > 1e-10 * std::max(1.0, scale);
  return rep;
}

UniquenessReport verify_uniqueness(const MeasurementMatrix& phi, const SubblockDictionary& dict) {
  return verify_uniqueness(sensing_matrix(phi, dict));
}

CompositionCheck composition_check(const RMatrix& phi, const CMatrix& psi, int k) {
  if (phi.cols() != psi.rows())
    throw Error(Errc::dimension_mismatch, "measurement matrix width does not match dictionary rows");
  RipOptions raw;
  raw.normalize_columns = false;
  CompositionCheck out;
  out.delta_dict = rip_constant(psi, k, raw).delta_k;
  const CMatrix composed = phi.cast<cplx>() * psi;
  out.delta_composed = rip_constant(composed, k, raw).delta_k;
  const CMatrix phic = phi.cast<cplx>();
  for_each_support(psi.cols(), k, raw, [&](const std::vector<Eigen::Index>& s) {
    const CMatrix sub = select_columns(psi, s);
    Eigen::JacobiSVD<CMatrix> svd(sub, Eigen::ComputeThinU);
    const RVector& sv = svd.singularValues();
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv(rank) > 1e-12 * std::max(sv(0), 1e-300)) ++rank;
    if (rank == 0) return;
    const CMatrix basis = svd.matrixU().leftCols(rank);
    out.delta_embed = std::max(out.delta_embed, isometry_deviation(phic * basis));
  });
  out.bound = out.delta_dict + out.delta_embed * (1.0 + out.delta_dict);
  out.holds = out.delta_composed <= out.bound + 1e-12;
  return out;
}

}  // namespace csmimo
