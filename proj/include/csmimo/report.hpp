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

#include "csmimo/harness.hpp"

#include <string>

namespace csmimo {

/// Uniqueness and isometry diagnostics for the measurement matrix and the
/// sub-block sensing matrix of a configuration, as "key: value" lines.
std::string analysis_report(const ExperimentSpec& spec);
std::string analysis_report(const ExperimentSpec& spec, const MeasurementMatrix& phi);

}  // namespace csmimo
