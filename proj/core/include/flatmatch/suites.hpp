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

#ifndef FLATMATCH_SUITES_HPP_
#define FLATMATCH_SUITES_HPP_

#include <cstdint>

#include "flatmatch/lattice.hpp"
#include "flatmatch/report.hpp"

namespace flatmatch {

struct SuiteOptions {
  // Lattices with at most this many elements get exhaustive triple checks.
  int exhaustive_cap = 200;
  int sampled_triples = 1000;
  int atom_subsets = 200;
  std::uint64_t seed = 1;
};

// Modular complements for every a <= x <= b (exhaustive mode) or for
// `sampled_triples` random triples.
CheckResult modular_complement_suite(const Lattice& lat, const SuiteOptions& opts);

// L(B) conclusions for `atom_subsets` random atom sets, plus B = all atoms.
CheckResult atom_sublattice_suite(const Lattice& lat, const SuiteOptions& opts);

// Geometric axioms, shadow inequality, cover partition at every element,
// lower-cover up-sets, crown freedom, the case 2 claim at every hyperplane
// (rank >= 3), and both suites above.
VerificationReport full_verification(const Lattice& lat, const SuiteOptions& opts);

bool exhaustive_mode(const Lattice& lat, const SuiteOptions& opts);

}  // namespace flatmatch

#endif  // FLATMATCH_SUITES_HPP_
