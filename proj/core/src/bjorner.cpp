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
#include <map>
#include <set>
#include <string>
#include <vector>

#include "flatmatch/errors.hpp"
#include "flatmatch/matching.hpp"

namespace flatmatch {
namespace {

std::string name(const Lattice& lat, ElementId x) { return lat.set_of(x).to_string(); }

std::size_t atoms_below(const Lattice& lat, ElementId x) {
  return shadows(lat, x).under.size();
}

// Matches `sub` with `recurse` and rewrites the result in parent ids.
Matching lifted_matching(const SubLattice& sub, const SubMatcher& recurse) {
  const Matching inner = recurse(sub.lattice);
  const MatchingVerdict verdict = verify_matching(sub.lattice, inner);
  if (!verdict.ok) {
    throw InvariantError("recursive matching failed verification: " + verdict.violation);
  }
  Matching out;
  for (const auto& [p, h] : inner) {
    out.emplace(sub.to_parent[static_cast<std::size_t>(p)],
                sub.to_parent[static_cast<std::size_t>(h)]);
  }
  return out;
}

}  // namespace

CaseOutcome match_bjorner_case1(const Lattice& lat, ElementId q, ElementId l0,
                                const SubMatcher& recurse) {
  if (lat.rank() < 3 || !lat.is_atom(q) || lat.rank_of(l0) != 2 || !lat.leq(q, l0)) {
    throw PreconditionError("case 1 needs rank >= 3, an atom q and a rank-2 l0 >= q");
  }
  CaseOutcome out;
  for (ElementId c : lat.covers_up(q)) {
    if (c == l0) continue;
    const std::size_t k = atoms_below(lat, c);
    if (k != 2) {
      out.note = "hypothesis fails: cover " + name(lat, c) + " of q has " +
                 std::to_string(k) + " atoms";
      return out;
    }
  }

  std::vector<ElementId> outside;
  std::vector<ElementId> inside;
  for (ElementId p : lat.atoms()) {
    (lat.leq(p, l0) ? inside : outside).push_back(p);
  }

  // s(p) = p v q is one-to-one on the atoms outside l0.
  std::map<ElementId, ElementId> s;
  std::set<ElementId> s_values;
  for (ElementId p : outside) {
    const ElementId c = lat.join(p, q);
    if (!s_values.insert(c).second) {
      throw InvariantError("s(p) = p v q is not injective under the case 1 hypothesis");
    }
    s.emplace(p, c);
  }

  const SubLattice up = interval(lat, q, lat.top());
  const Matching t = lifted_matching(up, recurse);

  Matching f;
  std::set<ElementId> used;
  for (ElementId p : outside) {
    f.emplace(p, t.at(s.at(p)));
    used.insert(f.at(p));
  }
  f.emplace(q, t.at(l0));
  used.insert(f.at(q));

  const auto over_l0 = shadows(lat, l0).over;
  out.h0 = over_l0.front();
  const ElementId z = modular_complement(lat, lat.bottom(), out.h0, l0);

  std::set<ElementId> r_values;
  for (ElementId p : inside) {
    if (!r_values.insert(lat.join(p, z)).second) {
      throw InvariantError("R(p) = p v z is not injective");
    }
  }
  for (ElementId p : inside) {
    if (p == q) continue;
    const ElementId rp = lat.join(p, z);
    ElementId choice = kNoElement;
    for (ElementId h : lat.covers_up(rp)) {
      if (h != out.h0 && !used.contains(h)) {
        choice = h;
        break;
      }
    }
    if (choice == kNoElement) {
      out.note = "no free hyperplane above R(p) = " + name(lat, rp) + " besides h0";
      return out;
    }
    f.emplace(p, choice);
    used.insert(choice);
  }

  const MatchingVerdict verdict = verify_matching(lat, f);
  out.checks.add("verified", verdict.ok, verdict.ok ? "matching" : verdict.violation);
  if (!verdict.ok) throw InvariantError("case 1 construction failed: " + verdict.violation);
  out.note = "q = " + name(lat, q) + ", l0 = " + name(lat, l0) + ", h0 = " +
             name(lat, out.h0) + ", z = " + name(lat, z);
  out.matching = std::move(f);
  return out;
}

CaseOutcome match_bjorner_case2(const Lattice& lat, ElementId q, ElementId l0,
                                ElementId l1, const SubMatcher& recurse) {
  if (lat.rank() < 3 || !lat.is_atom(q) || l0 == l1 || !lat.covered_by(q, l0) ||
      !lat.covered_by(q, l1) || atoms_below(lat, l1) < 3) {
    throw PreconditionError(
        "case 2 needs rank >= 3 and distinct covers l0, l1 of q with |under(l1)| >= 3");
  }
  CaseOutcome out;

  std::vector<ElementId> spare;
  for (ElementId p : shadows(lat, l1).under) {
    if (p != q) spare.push_back(p);
  }
  const ElementId p1 = spare[0];
  const ElementId p2 = spare[1];

  // A modular complement of l0 v p1 in the filter above l0 is a hyperplane
  // containing l0 but not p1.
  out.h0 = modular_complement(lat, l0, lat.top(), lat.join(l0, p1));
  const ElementId h0 = out.h0;
  if (!lat.is_hyperplane(h0) || lat.leq(p1, h0) || lat.leq(p2, h0)) {
    throw InvariantError("h0 = " + name(lat, h0) + " does not avoid p1 and p2");
  }

  const std::vector<ElementId>& lower = lat.covers_down(h0);
  std::vector<ElementId> c3;
  std::size_t c2_size = 0;
  for (ElementId c : lower) {
    if (shadows(lat, c).over.size() == 2) {
      ++c2_size;
    } else {
      c3.push_back(c);
    }
  }
  std::vector<ElementId> outside;
  for (ElementId a : lat.atoms()) {
    if (!lat.leq(a, h0)) outside.push_back(a);
  }
  if (outside.size() > c3.size()) {
    out.note = "no injection b: " + std::to_string(outside.size()) +
               " atoms outside h0 = " + name(lat, h0) + " but |C3| = " +
               std::to_string(c3.size()) + " (|C2| = " + std::to_string(c2_size) + ")";
    return out;
  }

  Matching f;
  std::map<ElementId, ElementId> b_inverse;
  for (std::size_t i = 0; i < outside.size(); ++i) {
    const ElementId p = outside[i];
    b_inverse.emplace(c3[i], p);
    f.emplace(p, lat.join(p, c3[i]));
  }

  const SubLattice down = interval(lat, lat.bottom(), h0);
  const Matching g = lifted_matching(down, recurse);
  for (ElementId p : shadows(lat, h0).under) {
    const ElementId gp = g.at(p);
    const auto owner = b_inverse.find(gp);
    const ElementId banned = owner == b_inverse.end() ? kNoElement : f.at(owner->second);
    ElementId choice = kNoElement;
    for (ElementId h : lat.covers_up(gp)) {
      if (h != h0 && h != banned) {
        choice = h;
        break;
      }
    }
    if (choice == kNoElement) {
      out.note = "g(p) = " + name(lat, gp) + " has no admissible cover";
      return out;
    }
    f.emplace(p, choice);
  }

  // A value other than h0 covering two lower covers of h0 would close a 4-crown.
  bool avoided = true;
  for (ElementId p : shadows(lat, h0).under) avoided = avoided && f.at(p) != h0;
  bool crown_free = true;
  for (const auto& [p, h] : f) {
    const auto below = std::count_if(lower.begin(), lower.end(),
                                     [&](ElementId c) { return lat.covered_by(c, h); });
    if (h != h0 && below > 1) crown_free = false;
  }
  const MatchingVerdict verdict = verify_matching(lat, f);
  out.checks.add("h0-avoided", avoided, "no atom below h0 is sent to h0");
  out.checks.add("no-crown", crown_free,
                 "no assigned hyperplane covers two lower covers of h0");
  out.checks.add("verified", verdict.ok, verdict.ok ? "matching" : verdict.violation);
  if (!out.checks.passed()) {
    throw InvariantError("case 2 construction failed:\n" + out.checks.failures());
  }
  out.note = "q = " + name(lat, q) + ", l0 = " + name(lat, l0) + ", l1 = " +
             name(lat, l1) + ", h0 = " + name(lat, h0) + ", |C2| = " +
             std::to_string(c2_size) + ", |C3| = " + std::to_string(c3.size());
  out.matching = std::move(f);
  return out;
}

}  // namespace flatmatch
