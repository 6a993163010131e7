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

#include <algorithm>
#include <deque>
#include <iterator>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "flatmatch/society.hpp"

namespace flatmatch {

std::optional<ObstructionWitness> extract_obstruction(const Society& soc) {
  const MaxEspousal best = max_espousal(soc);
  if (best.unmatched.empty()) return std::nullopt;

  // Alternating search: man -> any neighbour, woman -> her husband. Every
  // woman reached is married (no augmenting path), so |A*| - |K[A*]| equals
  // the number of unmatched men.
  std::set<int> men_reached(best.unmatched.begin(), best.unmatched.end());
  std::set<int> women_reached;
  std::deque<int> queue(best.unmatched.begin(), best.unmatched.end());
  std::map<int, int> husband;
  for (const auto& [m, w] : best.espousal.pairs) husband[w] = m;
  while (!queue.empty()) {
    const int m = queue.front();
    queue.pop_front();
    for (int w : soc.neighbors(m)) {
      if (!women_reached.insert(w).second) continue;
      const int h = husband.at(w);
      if (men_reached.insert(h).second) queue.push_back(h);
    }
  }

  const std::vector<int> a_star(men_reached.begin(), men_reached.end());
  const std::vector<int> k_a_star(women_reached.begin(), women_reached.end());
  ObstructionWitness witness;
  witness.pi = soc.induced(a_star, k_a_star);
  witness.kappa = static_cast<int>(a_star.size() - k_a_star.size());
  // Matching from the top index down leaves the low-index men over.
  const MaxEspousal within = max_espousal(witness.pi, /*descending=*/true);
  witness.removed = within.unmatched;
  witness.critical = within.espousal;
  return witness;
}

ObstructionVerdict verify_obstruction(const ObstructionWitness& witness,
                                      const Society& soc) {
  const Society& pi = witness.pi;
  if (!is_subsociety(pi, soc)) {
    return {false, "subsociety", "Π is not a subsociety of Λ"};
  }
  if (!is_saturated(pi, soc)) {
    return {false, "saturated", "some man of Π has a neighbour outside W_Π"};
  }

  std::vector<int> removed = witness.removed;
  std::sort(removed.begin(), removed.end());
  if (!std::includes(pi.men().begin(), pi.men().end(), removed.begin(), removed.end())) {
    return {false, "critical", "A is not inside M_Π"};
  }
  const Society rest = pi.without_men(removed);
  const auto& e = witness.critical.pairs;
  for (const auto& [m, w] : e) {
    if (!rest.has_man(m) || !rest.has_edge(m, w)) {
      return {false, "critical", "E_crit pairs a man outside Π - A or leaves K"};
    }
  }
  if (witness.critical.domain() != rest.men()) {
    return {false, "critical", "E_crit is not total on M_Π - A"};
  }
  std::vector<int> image = witness.critical.image();
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
    return {false, "critical", "E_crit is not injective"};
  }
  if (image != rest.women()) {
    return {false, "critical", "E_crit is not onto W_Π"};
  }
  if (!is_critical(rest)) {
    return {false, "critical", "Π - A is not critical"};
  }

  const int delta = deficiency(pi);
  if (delta != witness.kappa) {
    return {false, "deficiency",
            "δ(Π) = " + std::to_string(delta) + " but κ = " + std::to_string(witness.kappa)};
  }
  if (witness.kappa < 1 || static_cast<int>(removed.size()) != witness.kappa) {
    return {false, "kappa", "|A| = " + std::to_string(removed.size()) +
                                " does not match κ = " + std::to_string(witness.kappa)};
  }
  return {true, "", "δ(Π) = κ = " + std::to_string(witness.kappa)};
}

}  // namespace flatmatch
