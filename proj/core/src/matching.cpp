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
#include <set>
#include <string>

#include "flatmatch/errors.hpp"
#include "flatmatch/matching.hpp"

namespace flatmatch {

MatchingVerdict verify_matching(const Lattice& lat, const Matching& f) {
  const auto name = [&](ElementId x) { return lat.set_of(x).to_string(); };
  for (const auto& [p, h] : f) {
    if (p < 0 || p >= lat.size() || !lat.is_atom(p)) {
      return {false, "key " + std::to_string(p) + " is not an atom"};
    }
    if (h < 0 || h >= lat.size() || !lat.is_hyperplane(h)) {
      return {false, "image of " + name(p) + " is not a hyperplane"};
    }
  }
  for (ElementId p : lat.atoms()) {
    if (!f.contains(p)) return {false, "atom " + name(p) + " is unmatched"};
  }
  std::map<ElementId, ElementId> owner;
  for (const auto& [p, h] : f) {
    if (!lat.leq(p, h)) {
      return {false, "atom " + name(p) + " is not below " + name(h)};
    }
    const auto [it, fresh] = owner.emplace(h, p);
    if (!fresh) {
      return {false, "atoms " + name(it->second) + " and " + name(p) + " share " + name(h)};
    }
  }
  return {true, ""};
}

Matching identity_matching(const Lattice& lat) {
  if (lat.rank() != 2) throw PreconditionError("identity matching needs rank 2");
  Matching f;
  for (ElementId p : lat.atoms()) f.emplace(p, p);
  return f;
}

Matching match_hall(const Lattice& lat) {
  if (lat.rank() < 2) throw PreconditionError("matchings need rank >= 2");
  if (lat.rank() == 2) return identity_matching(lat);
  const MaxEspousal best = max_espousal(lattice_society(lat));
  if (!best.unmatched.empty()) {
    throw InvariantError("Hall violation in verified geometric lattice");
  }
  return Matching(best.espousal.pairs.begin(), best.espousal.pairs.end());
}

DegreeCheck check_milner_shelah(const Society& soc) {
  DegreeCheck out;
  std::map<int, int> degree_w;
  for (const auto& [m, w] : soc.edges()) ++degree_w[w];
  for (int m : soc.men()) {
    const auto nbrs = soc.neighbors(m);
    if (nbrs.empty()) {
      out.ok = false;
      out.isolated_man = m;
      out.detail = "man " + std::to_string(m) + " has no neighbours";
      return out;
    }
    for (int w : nbrs) {
      if (degree_w[w] > static_cast<int>(nbrs.size())) {
        out.ok = false;
        out.witness_edge = Edge{m, w};
        out.detail = "edge (" + std::to_string(m) + ", " + std::to_string(w) +
                     "): |K^-1[w]| = " + std::to_string(degree_w[w]) +
                     " > |K[m]| = " + std::to_string(nbrs.size());
        return out;
      }
    }
  }
  out.detail = "degree condition holds";
  return out;
}

Espousal match_milner_shelah(const Society& soc) {
  const DegreeCheck check = check_milner_shelah(soc);
  if (!check.ok) throw PreconditionError("degree condition violated: " + check.detail);
  MaxEspousal best = max_espousal(soc);
  if (!best.unmatched.empty()) {
    throw InvariantError("degree condition holds but no total espousal was found");
  }
  return std::move(best.espousal);
}

VerificationReport check_case2_claim(const Lattice& lat, ElementId h0) {
  if (lat.rank() < 3) throw PreconditionError("the claim needs rank >= 3");
  if (!lat.is_hyperplane(h0)) throw PreconditionError("h0 must be a hyperplane");

  std::vector<ElementId> outside;
  for (ElementId a : lat.atoms()) {
    if (!lat.leq(a, h0)) outside.push_back(a);
  }
  if (outside.empty()) throw PreconditionError("every atom lies below h0");
  const ElementId y = lat.join_all(outside);
  const auto over_y = shadows(lat, y).over;

  VerificationReport report;
  for (ElementId x : lat.covers_down(h0)) {
    const bool two_above = shadows(lat, x).over.size() == 2;
    const bool is_meet = std::any_of(over_y.begin(), over_y.end(),
                                     [&](ElementId h) { return lat.meet(h0, h) == x; });
    report.add("claim " + lat.set_of(x).to_string(), two_above == is_meet,
               std::string(two_above ? "in C2" : "in C3") +
                   (is_meet ? ", meet of h0 with a hyperplane above y"
                            : ", not such a meet"));
    report.checks.push_back(check_cover_partition(lat, x));
  }
  return report;
}

}  // namespace flatmatch
