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

#include "csmimo/report.hpp"

#include "csmimo/analysis.hpp"

#include <sstream>

namespace csmimo {

std::string analysis_report(const ExperimentSpec& spec) {
  spec.mux.validate_shape();
  return analysis_report(spec, gen_phi(spec.mux));
}

std::string analysis_report(const ExperimentSpec& spec, const MeasurementMatrix& phi) {
  const MuxConfig& cfg = spec.mux;
  const Constellation c = Constellation::by_name(spec.constellation);
  cfg.validate(c.size());
  const SubblockDictionary dict = SubblockDictionary::build(c, cfg.block_len(), cfg.dictionary_cap);
  const CMatrix sensing = sensing_matrix(phi, dict);

  std::ostringstream os;
  os.precision(10);
  os << "notation: " << cfg.notation() << '\n'
     << "constellation: " << c.name() << '\n'
     << "spatial_streams: " << cfg.m() << '\n'
     << "streams: " << cfg.l << '\n'
     << "subblocks: " << cfg.j << '\n'
     << "rho: " << cfg.rho() << '\n'
     << "phi_seed: " << cfg.phi_seed << '\n'
     << "phi_shape: " << phi.rows() << "x" << phi.cols() << '\n'
     << "phi_entry_std: " << phi.scale() << '\n'
     << "phi_tx_gain: " << phi.tx_gain() << '\n'
     << "dictionary_columns: " << dict.size() << '\n';

  if (static_cast<std::size_t>(phi.cols()) <= SparkOptions{}.max_columns) {
    os << "phi_spark: " << spark(phi.matrix()) << '\n' << "phi_spark_full: " << (phi.rows() + 1) << '\n';
  } else {
    os << "phi_spark: skipped (too many columns)\n";
  }
  RipOptions raw;
  raw.normalize_columns = false;
  auto put = [&os](const char* key, const RipEstimate& e) {
    os << key << ": " << e.delta_k << (e.exhaustive ? "" : " (sampled)") << '\n';
  };
  for (int k = 1; k <= std::min(2, phi.cols()); ++k) {
    const std::string key = "phi_rip_delta" + std::to_string(k);
    put(key.c_str(), rip_constant(phi.matrix(), k));
    put((key + "_raw").c_str(), rip_constant(phi.matrix(), k, raw));
  }
  if (sensing.cols() >= 2) {
    put("sensing_rip_delta2", rip_constant(sensing, 2));
    put("sensing_rip_delta2_raw", rip_constant(sensing, 2, raw));
  }
  if (dict.size() <= kUniquenessMaxColumns) {
    const UniquenessReport u = verify_uniqueness(sensing);
    os << "sensing_columns_distinct: " << (u.unique ? "true" : "false") << '\n'
       << "sensing_min_column_distance: " << u.min_distance << '\n'
       << "sensing_closest_pair: " << u.first << "," << u.second << '\n';
  } else {
    os << "sensing_columns_distinct: skipped (too many columns)\n";
  }
  if (dict.size() >= 2) {
    CMatrix psi = dict.psi();
    for (Eigen::Index col = 0; col < psi.cols(); ++col) psi.col(col).normalize();
    const CompositionCheck cc = composition_check(phi.matrix(), psi, 2);
    os << "composition_delta2_dictionary: " << cc.delta_dict << '\n'
       << "composition_delta2_embedding: " << cc.delta_embed << '\n'
       << "composition_delta2_composed: " << cc.delta_composed << '\n'
       << "composition_bound: " << cc.bound << '\n'
       << "composition_bound_holds: " << (cc.holds ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace csmimo
