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

#ifndef FLATMATCH_CORPUS_HPP_
#define FLATMATCH_CORPUS_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "flatmatch/matroid.hpp"
#include "flatmatch/society.hpp"

namespace flatmatch {

inline constexpr std::uint64_t kDefaultCorpusSeed = 20260101;
inline constexpr int kDefaultRandomMatroids = 50;

struct CorpusEntry {
  std::string name;
  MatroidSpec spec;
};

// Cycle matroid of K_n; edges in lexicographic vertex order.
MatroidSpec complete_graph(int n);
// PG(2, p): the p^2 + p + 1 normalized nonzero vectors of GF(p)^3.
MatroidSpec projective_plane(int p);
// A random GF(2) vector matroid with at most `max_ground` columns in dimension
// 3 or 4 (columns may repeat or vanish) and rank >= 1.
MatroidSpec random_gf2_matroid(std::mt19937_64& rng, int max_ground = 8);

// Random society with 0..max_side men and women and a random edge density.
Society random_society(std::mt19937_64& rng, int max_side = 12);

// Uniform U(k, n) for 2 <= k <= n <= 6, K4, K5, PG(2,2), PG(2,3), then
// `random_count` seeded random GF(2) matroids with at most 8 elements.
std::vector<CorpusEntry> standard_corpus(std::uint64_t seed = kDefaultCorpusSeed,
                                         int random_count = kDefaultRandomMatroids);

// Bounded integer draw that does not depend on the standard library's
// distribution implementations.
inline int draw(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace flatmatch

#endif  // FLATMATCH_CORPUS_HPP_
