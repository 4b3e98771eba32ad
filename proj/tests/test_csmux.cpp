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

#include <catch2/catch_amalgamated.hpp>

#include "csmimo/analysis.hpp"
#include "csmimo/channel.hpp"
#include "csmimo/csmux.hpp"
#include "csmimo/error.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

using namespace csmimo;
using Catch::Matchers::WithinAbs;

namespace {

MuxConfig cfg_of(int nt, int nr, int l, int j, std::uint64_t seed = 3) {
  MuxConfig c;
  c.nt = nt;
  c.nr = nr;
  c.l = l;
  c.j = j;
  c.phi_seed = seed;
  return c;
}

CVector random_vector(Eigen::Index n, Rng& rng) {
  CVector v(n);
  for (auto& e : v) e = complex_normal(rng, 1.0);
  return v;
}

bool has_code(const Error& e, Errc c) { return e.code() == c; }

}  // namespace

TEST_CASE("Configuration geometry") {
  const auto c = cfg_of(4, 4, 8, 2);
  CHECK(c.m() == 4);
  CHECK(c.rho() == 0.5);
  CHECK(c.block_len() == 4);
  CHECK(c.block_rows() == 2);
  CHECK(c.notation() == "(4,4)-8");
  CHECK(cfg_of(2, 6, 4, 1).m() == 2);
}

TEST_CASE("Configuration validation") {
  CHECK_NOTHROW(cfg_of(4, 4, 8, 2).validate(4));
  CHECK_THROWS_MATCHES(cfg_of(4, 4, 8, 3).validate_shape(), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) { return has_code(e, Errc::bad_subblock_shape); }));
  CHECK_THROWS_MATCHES(cfg_of(4, 4, 6, 4).validate_shape(), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) { return has_code(e, Errc::bad_subblock_shape); }));
  // rho > 1
  CHECK_THROWS_MATCHES(cfg_of(4, 4, 2, 1).validate_shape(), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) { return has_code(e, Errc::invalid_config); }));
  CHECK_THROWS_AS(cfg_of(0, 4, 8, 1).validate_shape(), Error);
  // 4^9 > 2^16
  CHECK_THROWS_MATCHES(cfg_of(8, 8, 18, 2).validate(4), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) { return has_code(e, Errc::dictionary_too_large); }));
  CHECK_NOTHROW(cfg_of(8, 8, 16, 2).validate(4));
}

TEST_CASE("Measurement matrix shape and determinism") {
  const auto phi = gen_phi(cfg_of(4, 4, 8, 2));
  CHECK(phi.rows() == 2);
  CHECK(phi.cols() == 4);
  CHECK(phi.scale() == 1.0 / std::sqrt(2.0));
  CHECK(gen_phi(cfg_of(4, 4, 8, 2)).matrix() == phi.matrix());
  CHECK(gen_phi(cfg_of(4, 4, 8, 2, 4)).matrix() != phi.matrix());

  const auto unit = gen_phi(cfg_of(4, 4, 4, 4));
  CHECK(unit.rows() == 1);
  CHECK(unit.cols() == 1);

  CHECK_THROWS_MATCHES(gen_phi(cfg_of(4, 4, 8, 3)), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) { return has_code(e, Errc::bad_subblock_shape); }));
}

TEST_CASE("Measurement matrix entries have variance 1/(M/J)") {
  const auto cfg = cfg_of(20, 20, 40, 1);
  double sum2 = 0.0;
  std::size_t n = 0;
  for (std::uint64_t s = 0; s < 25; ++s) {
    auto c = cfg;
    c.phi_seed = s;
    const auto phi = gen_phi(c);
    sum2 += phi.matrix().squaredNorm();
    n += static_cast<std::size_t>(phi.matrix().size());
  }
  CHECK_THAT(sum2 / static_cast<double>(n), WithinAbs(1.0 / 20.0, 0.002));
}

TEST_CASE("Identity multiplexing passes symbols through") {
  const auto cfg = cfg_of(4, 4, 4, 4);
  Rng rng(1);
  const CVector x = random_vector(4, rng);
  const auto phi = MeasurementMatrix::identity(1);
  CHECK(phi.tx_gain() == 1.0);
  CHECK(multiplex(x, phi, cfg) == x);
}

TEST_CASE("Hand-computable 1x2 sub-blocks") {
  const auto cfg = cfg_of(2, 2, 4, 2);
  RMatrix p(1, 2);
  p << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const MeasurementMatrix phi(p, 1.0);
  CHECK_THAT(phi.tx_gain(), WithinAbs(1.0, 1e-15));
  CVector x(4);
  x << cplx(1, 0), cplx(2, 1), cplx(0, -1), cplx(3, 3);
  const CVector z = multiplex(x, phi, cfg);
  REQUIRE(z.size() == 2);
  CHECK(std::abs(z(0) - (x(0) + x(1)) / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(z(1) - (x(2) + x(3)) / std::sqrt(2.0)) < 1e-15);
  CHECK_THROWS_MATCHES(multiplex(CVector::Zero(3), phi, cfg), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) { return has_code(e, Errc::dimension_mismatch); }));
}

TEST_CASE("Multiplexing equals the dense block-diagonal operator") {
  const auto cfg = cfg_of(4, 4, 8, 2);
  const auto phi = gen_phi(cfg);
  const CMatrix dense = oracle::block_diagonal(phi.matrix(), cfg.j);
  Rng rng(17);
  for (int rep = 0; rep < 100; ++rep) {
    const CVector x = random_vector(8, rng);
    CHECK((multiplex(x, phi, cfg) - phi.tx_gain() * dense * x).norm() < 1e-12);
  }
}

TEST_CASE("Multiplexing is linear and sub-blocks are independent") {
  const auto cfg = cfg_of(20, 20, 40, 10);
  const auto phi = gen_phi(cfg);
  Rng rng(23);
  for (int rep = 0; rep < 50; ++rep) {
    const CVector x1 = random_vector(40, rng);
    const CVector x2 = random_vector(40, rng);
    const cplx a(0.3, -1.2), b(2.0, 0.5);
    const CVector lhs = multiplex_raw(a * x1 + b * x2, phi, cfg);
    const CVector rhs = a * multiplex_raw(x1, phi, cfg) + b * multiplex_raw(x2, phi, cfg);
    CHECK((lhs - rhs).norm() < 1e-12);

    CVector x3 = x1;
    const int block = rep % cfg.j;
    x3.segment(block * cfg.block_len(), cfg.block_len()) = random_vector(cfg.block_len(), rng);
    const CVector d = multiplex_raw(x3, phi, cfg) - multiplex_raw(x1, phi, cfg);
    for (int blk = 0; blk < cfg.j; ++blk) {
      const double change = d.segment(blk * cfg.block_rows(), cfg.block_rows()).norm();
      if (blk == block)
        CHECK(change > 0.0);
      else
        CHECK(change == 0.0);
    }
  }
}

TEST_CASE("Power normalisation gives unit energy per spatial stream") {
  const auto cfg = cfg_of(4, 4, 8, 2);
  const auto phi = gen_phi(cfg);
  Rng rng(31);
  double energy = 0.0;
  constexpr int draws = 40000;
  for (int i = 0; i < draws; ++i) energy += multiplex(random_vector(8, rng), phi, cfg).squaredNorm();
  CHECK_THAT(energy / (draws * cfg.m()), WithinAbs(1.0, 0.02));
}

TEST_CASE("Gaussian measurement matrices have full spark") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto cfg = cfg_of(4, 4, 8, 1, s);  // 4x8
    CHECK(spark(gen_phi(cfg).matrix()) == cfg.block_rows() + 1);
  }
}

TEST_CASE("Matrix dump round trip") {
  const auto phi = gen_phi(cfg_of(4, 4, 8, 2));
  std::stringstream ss;
  write_matrix(ss, phi.matrix());
  const std::string text = ss.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
  CHECK(text.find(',') == std::string::npos);
  CHECK(read_matrix(ss) == phi.matrix());

  std::stringstream bad("1 2\n3\n");
  CHECK_THROWS_AS(read_matrix(bad), Error);
}
