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

#include "csmimo/error.hpp"

namespace csmimo {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::invalid_config: return "InvalidConfig";
    case Errc::indivisible_bit_length: return "IndivisibleBitLength";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::bad_subblock_shape: return "BadSubblockShape";
    case Errc::dictionary_too_large: return "DictionaryTooLarge";
    case Errc::not_a_constellation_tuple: return "NotAConstellationTuple";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::rank_deficient_channel: return "RankDeficientChannel";
    case Errc::too_many_columns: return "TooManyColumns";
    case Errc::io: return "IoError";
  }
  return "Unknown";
}

}  // namespace csmimo
