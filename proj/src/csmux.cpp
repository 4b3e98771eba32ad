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

#include "csmimo/csmux.hpp"

#include "csmimo/error.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace csmimo {

std::string MuxConfig::notation() const {
  return "(" + std::to_string(nt) + "," + std::to_string(nr) + ")-" + std::to_string(l);
}

void MuxConfig::validate_shape() const {
  if (nt < 1 || nr < 1) throw Error(Errc::invalid_config, "antenna counts must be >= 1");
  if (l < 1) throw Error(Errc::invalid_config, "stream count l must be >= 1");
  if (j < 1) throw Error(Errc::invalid_config, "sub-block count j must be >= 1");
  if (l < m())
    throw Error(Errc::invalid_config, "l must be >= min(nt, nr) so that rho = m/l lies in (0, 1]");
  if (l % j != 0 || m() % j != 0)
    throw Error(Errc::bad_subblock_shape, "j=" + std::to_string(j) + " must divide both l=" + std::to_string(l) +
                                              " and m=" + std::to_string(m()));
}

void MuxConfig::validate(std::size_t alphabet_size) const {
  validate_shape();
  std::size_t d = 1;
  for (int i = 0; i < block_len(); ++i) {
    if (d > dictionary_cap / alphabet_size)
      throw Error(Errc::dictionary_too_large, "dictionary width " + std::to_string(alphabet_size) + "^" +
                                                  std::to_string(block_len()) + " exceeds cap " +
                                                  std::to_string(dictionary_cap));
    d *= alphabet_size;
  }
}

MeasurementMatrix::MeasurementMatrix(RMatrix phi, double scale) : phi_(std::move(phi)), scale_(scale) {
  const double fro2 = phi_.squaredNorm();
  tx_gain_ = fro2 > 0.0 ? std::sqrt(static_cast<double>(phi_.rows()) / fro2) : 1.0;
}

MeasurementMatrix MeasurementMatrix::identity(int n) { return {RMatrix::Identity(n, n), 1.0}; }

MeasurementMatrix gen_phi(const MuxConfig& cfg) {
  Rng rng(cfg.phi_seed);
  return gen_phi(cfg, rng);
}

MeasurementMatrix gen_phi(const MuxConfig& cfg, Rng& rng) {
  cfg.validate_shape();
  const int rows = cfg.block_rows();
  const int cols = cfg.block_len();
  const double scale = 1.0 / std::sqrt(static_cast<double>(rows));
  std::normal_distribution<double> n(0.0, scale);
  RMatrix phi(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) phi(r, c) = n(rng);
  return {std::move(phi), scale};
}

CVector multiplex_raw(const CVector& x, const MeasurementMatrix& phi, const MuxConfig& cfg) {
  if (x.size() != cfg.l)
    throw Error(Errc::dimension_mismatch,
                "symbol vector length " + std::to_string(x.size()) + " != l=" + std::to_string(cfg.l));
  if (phi.rows() != cfg.block_rows() || phi.cols() != cfg.block_len())
    throw Error(Errc::dimension_mismatch, "measurement matrix shape does not match configuration");
  const int n = cfg.block_len();
  const int r = cfg.block_rows();
  const CMatrix a = phi.matrix().cast<cplx>();
  CVector z(cfg.m());
  for (int b = 0; b < cfg.j; ++b) z.segment(b * r, r) = a * x.segment(b * n, n);
  return z;
}

CVector multiplex(const CVector& x, const MeasurementMatrix& phi, const MuxConfig& cfg) {
  return multiplex_raw(x, phi, cfg) * phi.tx_gain();
}

void write_matrix(std::ostream& os, const RMatrix& a) {
  char buf[64];
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      auto res = std::to_chars(buf, buf + sizeof buf, a(r, c), std::chars_format::general, 17);
      if (c) os << ' ';
      os.write(buf, res.ptr - buf);
    }
    os << '\n';
  }
}

RMatrix read_matrix(std::istream& is) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<double> row;
    const char* p = line.data();
    const char* end = p + line.size();
    while (p < end) {
      while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
      if (p == end) break;
      double v = 0.0;
      auto res = std::from_chars(p, end, v);
      if (res.ec != std::errc{}) throw Error(Errc::io, "malformed matrix entry: " + line);
      row.push_back(v);
      p = res.ptr;
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw Error(Errc::io, "ragged matrix rows");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return {};
  RMatrix a(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
  return a;
}

}  // namespace csmimo
