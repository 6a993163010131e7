// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLATMATCH_EXPORT_HPP_
#define FLATMATCH_EXPORT_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "flatmatch/lattice.hpp"
#include "flatmatch/matching.hpp"
#include "flatmatch/report.hpp"
#include "flatmatch/society.hpp"

namespace flatmatch {

using Json = nlohmann::ordered_json;

// {"size", "rank", "bottom", "top", "atoms", "hyperplanes",
//  "elements": [{"id", "flat", "rank", "covers"}]}
Json lattice_to_json(const Lattice& lat);

// Hasse diagram, bottom to top, one `rank=same` row per rank.
std::string lattice_to_dot(const Lattice& lat);

Json report_to_json(const VerificationReport& report);
Json society_to_json(const Society& soc);
Json espousal_to_json(const Espousal& e);
// Strategy trace, f as flat pairs, and the verdict.
Json matching_report_to_json(const Lattice& lat, const DispatchResult& result);
Json witness_to_json(const ObstructionWitness& w, const ObstructionVerdict& verdict);

}  // namespace flatmatch

#endif  // FLATMATCH_EXPORT_HPP_
