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

#include <string>
#include <utility>
#include <vector>

#include "flatmatch/corpus.hpp"

namespace flatmatch {

MatroidSpec complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return MatroidSpec::graphic(n, std::move(edges));
}

MatroidSpec projective_plane(int p) {
  std::vector<std::vector<int>> points;
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      for (int c = 0; c < p; ++c) {
        const int lead = a != 0 ? a : (b != 0 ? b : c);
        if (lead == 1) points.push_back({a, b, c});
      }
    }
  }
  return MatroidSpec::linear(p, std::move(points));
}

MatroidSpec random_gf2_matroid(std::mt19937_64& rng, int max_ground) {
  while (true) {
    const int n = draw(rng, 3, max_ground);
    const int dim = draw(rng, 3, 4);
    std::vector<std::vector<int>> columns;
    for (int e = 0; e < n; ++e) {
      std::vector<int> col;
      for (int i = 0; i < dim; ++i) col.push_back(draw(rng, 0, 1));
      columns.push_back(std::move(col));
    }
    MatroidSpec spec = MatroidSpec::linear(2, std::move(columns));
    if (spec.rank() >= 1) return spec;
  }
}

Society random_society(std::mt19937_64& rng, int max_side) {
  const int m = draw(rng, 0, max_side);
  const int w = draw(rng, 0, max_side);
  const int density = draw(rng, 0, 100);
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < w; ++j) {
      if (draw(rng, 1, 100) <= density) edges.emplace_back(i, j);
    }
  }
  return Society::with_counts(m, w, std::move(edges));
}

std::vector<CorpusEntry> standard_corpus(std::uint64_t seed, int random_count) {
  std::vector<CorpusEntry> corpus;
  for (int n = 2; n <= 6; ++n) {
    for (int k = 2; k <= n; ++k) {
      corpus.push_back({"uniform_" + std::to_string(k) + "_" + std::to_string(n),
                        MatroidSpec::uniform(k, n)});
    }
  }
  corpus.push_back({"graphic_k4", complete_graph(4)});
  corpus.push_back({"graphic_k5", complete_graph(5)});
  corpus.push_back({"pg_2_2", projective_plane(2)});
  corpus.push_back({"pg_2_3", projective_plane(3)});
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_count; ++i) {
    std::string id = std::to_string(i);
    if (id.size() < 2) id = "0" + id;
    corpus.push_back({"gf2_random_" + id, random_gf2_matroid(rng)});
  }
  return corpus;
}

}  // namespace flatmatch
