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

#include "csmimo/config.hpp"

#include "csmimo/error.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace csmimo {

namespace {

using nlohmann::json;

double parse_double(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "inf" || text == "+inf") return std::numeric_limits<double>::infinity();
  double v = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw Error(Errc::invalid_config, "not a number: '" + std::string(text) + "'");
  return v;
}

double snr_value(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_double(v.get<std::string>());
  throw Error(Errc::invalid_config, "SNR entries must be numbers or \"inf\"");
}

template <typename T>
T get_integer(const json& v, const char* key) {
  if (!v.is_number_integer()) throw Error(Errc::invalid_config, std::string("'") + key + "' must be an integer");
  if (v.is_number_unsigned()) return static_cast<T>(v.get<std::uint64_t>());
  const auto s = v.get<std::int64_t>();
  if constexpr (std::is_unsigned_v<T>)
    if (s < 0) throw Error(Errc::invalid_config, std::string("'") + key + "' must be non-negative");
  return static_cast<T>(s);
}

}  // namespace

std::vector<double> parse_snr_range(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t colon = text.find(':', start);
    parts.push_back(text.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() == 1) return {parse_double(parts[0])};
  if (parts.size() != 3) throw Error(Errc::invalid_config, "SNR range must be start:step:stop");
  const double lo = parse_double(parts[0]);
  const double step = parse_double(parts[1]);
  const double hi = parse_double(parts[2]);
  if (!(step > 0.0) || !std::isfinite(lo) || !std::isfinite(hi) || hi < lo)
    throw Error(Errc::invalid_config, "SNR range needs finite start <= stop and step > 0");
  std::vector<double> out;
  const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  for (long i = 0; i <= n; ++i) out.push_back(lo + static_cast<double>(i) * step);
  return out;
}

ExperimentSpec parse_spec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::invalid_config, std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(Errc::invalid_config, "config must be a JSON object");

  static const std::set<std::string> known = {
      "nt",     "nr",       "l",          "j",        "constellation", "phi_seed",  "snr_db",  "trials",
      "min_errors", "master_seed", "solver", "baseline", "dictionary_cap", "omp_k_max", "omp_tol", "rho"};
  for (const auto& [key, _] : doc.items())
    if (!known.count(key)) throw Error(Errc::invalid_config, "unknown config key '" + key + "'");
  for (const char* key : {"nt", "nr", "l"})
    if (!doc.contains(key)) throw Error(Errc::invalid_config, std::string("missing config key '") + key + "'");

  ExperimentSpec spec;
  try {
    spec.mux.nt = get_integer<int>(doc["nt"], "nt");
    spec.mux.nr = get_integer<int>(doc["nr"], "nr");
    spec.mux.l = get_integer<int>(doc["l"], "l");
    if (doc.contains("j")) spec.mux.j = get_integer<int>(doc["j"], "j");
    if (doc.contains("phi_seed")) spec.mux.phi_seed = get_integer<std::uint64_t>(doc["phi_seed"], "phi_seed");
    if (doc.contains("dictionary_cap"))
      spec.mux.dictionary_cap = get_integer<std::size_t>(doc["dictionary_cap"], "dictionary_cap");
    if (doc.contains("constellation")) spec.constellation = doc["constellation"].get<std::string>();
    if (doc.contains("snr_db")) {
      const json& s = doc["snr_db"];
      if (s.is_string())
        spec.snr_db = parse_snr_range(s.get<std::string>());
      else if (s.is_array())
        for (const auto& v : s) spec.snr_db.push_back(snr_value(v));
      else
        spec.snr_db.push_back(snr_value(s));
    }
    if (doc.contains("trials")) spec.trials = get_integer<std::uint64_t>(doc["trials"], "trials");
    if (doc.contains("min_errors")) spec.min_errors = get_integer<std::uint64_t>(doc["min_errors"], "min_errors");
    if (doc.contains("master_seed")) spec.master_seed = get_integer<std::uint64_t>(doc["master_seed"], "master_seed");
    if (doc.contains("solver")) spec.solver = parse_solver(doc["solver"].get<std::string>());
    if (doc.contains("baseline")) spec.baseline = parse_baseline(doc["baseline"].get<std::string>());
    if (doc.contains("omp_k_max")) spec.omp.k_max = get_integer<int>(doc["omp_k_max"], "omp_k_max");
    if (doc.contains("omp_tol")) spec.omp.tol = doc["omp_tol"].get<double>();
    if (doc.contains("rho")) {
      const double rho = doc["rho"].get<double>();
      if (std::abs(rho - spec.mux.rho()) > 1e-12)
        throw Error(Errc::invalid_config, "rho does not equal min(nt, nr) / l");
    }
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_config, std::string("bad config value: ") + e.what());
  }
  if (spec.snr_db.empty()) spec.snr_db = parse_snr_range("0:2:20");
  spec.validate();
  return spec;
}

ExperimentSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

}  // namespace csmimo
