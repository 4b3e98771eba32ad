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

#include "csmimo/detection.hpp"

#include "csmimo/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace csmimo {

EqualizerOutput zf_equalize(const CVector& y, const ChannelRealization& h, double gain) {
  if (y.size() != h.h.rows())
    throw Error(Errc::dimension_mismatch, "received vector length " + std::to_string(y.size()) +
                                              " != nr=" + std::to_string(h.h.rows()));
  if (h.h.cols() > h.h.rows())
    throw Error(Errc::rank_deficient_channel, "channel has more streams than receive antennas");
  Eigen::JacobiSVD<CMatrix> svd(h.h, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RVector& s = svd.singularValues();
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  if (!(smin > kRankTolerance * smax))
    throw Error(Errc::rank_deficient_channel, "channel matrix is rank deficient");
  CVector uy = svd.matrixU().adjoint() * y;
  for (Eigen::Index i = 0; i < uy.size(); ++i) uy(i) /= s(i);
  EqualizerOutput out;
  out.z_hat = svd.matrixV() * uy;
  if (gain != 1.0) out.z_hat /= gain;
  out.condition_number = smax / smin;
  return out;
}

CMatrix sensing_matrix(const MeasurementMatrix& phi, const SubblockDictionary& dict) {
  if (phi.cols() != dict.n())
    throw Error(Errc::dimension_mismatch, "measurement matrix width does not match dictionary sub-block length");
  return phi.matrix().cast<cplx>() * dict.psi();
}

SubblockEstimate recover_subblock_ml(const CVector& z, const CMatrix& sensing) {
  if (z.size() != sensing.rows())
    throw Error(Errc::dimension_mismatch, "sub-block length does not match sensing matrix rows");
  SubblockEstimate best{0, std::numeric_limits<double>::infinity()};
  for (Eigen::Index k = 0; k < sensing.cols(); ++k) {
    const double r = (z - sensing.col(k)).squaredNorm();
    if (r < best.residual) best = {static_cast<std::size_t>(k), r};
  }
  best.residual = std::sqrt(best.residual);
  return best;
}

SubblockEstimate recover_subblock_ml(const CVector& z, const MeasurementMatrix& phi, const SubblockDictionary& dict) {
  return recover_subblock_ml(z, sensing_matrix(phi, dict));
}

OmpResult recover_subblock_omp(const CVector& z, const CMatrix& sensing, int k_max, double tol) {
  if (k_max < 1) throw Error(Errc::invalid_argument, "OMP needs k_max >= 1");
  if (z.size() != sensing.rows())
    throw Error(Errc::dimension_mismatch, "sub-block length does not match sensing matrix rows");
  const RVector norms = sensing.colwise().norm().transpose();
  OmpResult out;
  out.coefficients.resize(0);
  CVector r = z;
  CMatrix selected(sensing.rows(), 0);
  for (int it = 0; it < k_max; ++it) {
    if (r.norm() <= tol) break;
    const CVector corr = sensing.adjoint() * r;
    Eigen::Index best = -1;
    double best_val = 0.0;
    for (Eigen::Index k = 0; k < sensing.cols(); ++k) {
      if (norms(k) == 0.0) continue;
      const double v = std::abs(corr(k)) / norms(k);
      if (v > best_val) {
        best_val = v;
        best = k;
      }
    }
    if (best < 0) break;
    const auto idx = static_cast<std::size_t>(best);
    if (std::find(out.support.begin(), out.support.end(), idx) != out.support.end()) break;
    out.support.push_back(idx);
    selected.conservativeResize(Eigen::NoChange, selected.cols() + 1);
    selected.col(selected.cols() - 1) = sensing.col(best);
    out.coefficients = selected.colPivHouseholderQr().solve(z);
    r = z - selected * out.coefficients;
  }
  out.residual = r.norm();
  return out;
}

Solver parse_solver(std::string_view name) {
  if (name == "ml") return Solver::ml;
  if (name == "omp") return Solver::omp;
  if (name == "oneshot") return Solver::oneshot;
  throw Error(Errc::invalid_config, "unknown solver '" + std::string(name) + "'");
}

const char* to_string(Solver s) noexcept {
  switch (s) {
    case Solver::ml: return "ml";
    case Solver::omp: return "omp";
    case Solver::oneshot: return "oneshot";
  }
  return "?";
}

Demultiplexer::Demultiplexer(MuxConfig cfg, MeasurementMatrix phi, SubblockDictionary dict, Solver solver,
                             OmpOptions omp)
    : cfg_(cfg), phi_(std::move(phi)), dict_(std::move(dict)), solver_(solver), omp_(omp) {
  cfg_.validate_shape();
  if (phi_.rows() != cfg_.block_rows() || phi_.cols() != cfg_.block_len())
    throw Error(Errc::dimension_mismatch, "measurement matrix shape does not match configuration");
  if (dict_.n() != cfg_.block_len())
    throw Error(Errc::dimension_mismatch, "dictionary sub-block length does not match configuration");
  sensing_ = sensing_matrix(phi_, dict_);
}

RecoveryResult Demultiplexer::demux(const CVector& y, const ChannelRealization& h) const {
  if (h.m_tx() != cfg_.m())
    throw Error(Errc::dimension_mismatch, "channel width does not match the spatial stream count");
  return solver_ == Solver::oneshot ? demux_oneshot(y, h) : demux_two_step(y, h);
}

RecoveryResult Demultiplexer::demux_two_step(const CVector& y, const ChannelRealization& h) const {
  const EqualizerOutput eq = zf_equalize(y, h, phi_.tx_gain());
  const int r = cfg_.block_rows();
  const int n = cfg_.block_len();
  RecoveryResult out;
  out.x_hat.resize(cfg_.l);
  out.s_index.reserve(static_cast<std::size_t>(cfg_.j));
  out.residual_norm.reserve(static_cast<std::size_t>(cfg_.j));
  for (int b = 0; b < cfg_.j; ++b) {
    const CVector zb = eq.z_hat.segment(b * r, r);
    if (solver_ == Solver::ml) {
      const SubblockEstimate est = recover_subblock_ml(zb, sensing_);
      out.s_index.push_back(est.index);
      out.residual_norm.push_back(est.residual);
      out.x_hat.segment(b * n, n) = dict_.psi().col(static_cast<Eigen::Index>(est.index));
    } else {
      const OmpResult omp = recover_subblock_omp(zb, sensing_, omp_.k_max, omp_.tol);
      CVector xb = CVector::Zero(n);
      std::size_t dominant = 0;
      double dominant_mag = -1.0;
      for (std::size_t i = 0; i < omp.support.size(); ++i) {
        const auto col = static_cast<Eigen::Index>(omp.support[i]);
        xb += omp.coefficients(static_cast<Eigen::Index>(i)) * dict_.psi().col(col);
        const double mag = std::abs(omp.coefficients(static_cast<Eigen::Index>(i)));
        if (mag > dominant_mag) {
          dominant_mag = mag;
          dominant = omp.support[i];
        }
      }
      out.s_index.push_back(dominant);
      out.residual_norm.push_back(omp.residual);
      out.x_hat.segment(b * n, n) = xb;
    }
  }
  return out;
}

RecoveryResult Demultiplexer::demux_oneshot(const CVector& y, const ChannelRealization& h) const {
  // rank check shared with the two-step path
  (void)zf_equalize(y, h, phi_.tx_gain());
  const CMatrix g = h.h * phi_.tx_gain();
  const int r = cfg_.block_rows();
  const int n = cfg_.block_len();
  const Eigen::Index nr = g.rows();
  RecoveryResult out;
  out.x_hat.resize(cfg_.l);
  for (int b = 0; b < cfg_.j; ++b) {
    CMatrix hb = g.middleCols(b * r, r);
    CVector yb = y;
    if (cfg_.j > 1) {
      CMatrix others(nr, g.cols() - r);
      others << g.leftCols(b * r), g.rightCols(g.cols() - (b + 1) * r);
      Eigen::HouseholderQR<CMatrix> qr(others);
      const CMatrix q = qr.householderQ() * CMatrix::Identity(nr, others.cols());
      yb -= q * (q.adjoint() * yb);
      hb -= q * (q.adjoint() * hb);
    }
    const CMatrix a = hb * sensing_;
    const SubblockEstimate est = recover_subblock_ml(yb, a);
    out.s_index.push_back(est.index);
    out.residual_norm.push_back(est.residual);
    out.x_hat.segment(b * n, n) = dict_.psi().col(static_cast<Eigen::Index>(est.index));
  }
  return out;
}

RecoveryResult demux(const CVector& y, const ChannelRealization& h, const MeasurementMatrix& phi,
                     const SubblockDictionary& dict, const MuxConfig& cfg, Solver solver) {
  return Demultiplexer(cfg, phi, dict, solver).demux(y, h);
}

}  // namespace csmimo
