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
#include <string>
#include <unordered_set>
#include <vector>

#include "flatmatch/errors.hpp"
#include "flatmatch/lattice.hpp"

namespace flatmatch {

ElementId modular_complement(const Lattice& lat, ElementId a, ElementId b,
                             ElementId x) {
  if (!lat.leq(a, x) || !lat.leq(x, b)) {
    throw PreconditionError("modular_complement needs a <= x <= b");
  }
  // Maximal chain x = c0 < c1 < ... < ck = b, lowest-indexed cover first.
  std::vector<ElementId> chain{x};
  while (chain.back() != b) {
    const auto& ups = lat.covers_up(chain.back());
    const auto next = std::find_if(ups.begin(), ups.end(),
                                   [&](ElementId u) { return lat.leq(u, b); });
    if (next == ups.end()) throw InvariantError("interval [x, b] has no cover step");
    chain.push_back(*next);
  }

  ElementId y = a;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const auto& atoms = lat.atoms();
    const auto pick = std::find_if(atoms.begin(), atoms.end(), [&](ElementId p) {
      return lat.leq(p, chain[i]) && !lat.leq(p, chain[i - 1]);
    });
    if (pick == atoms.end()) {
      throw InvariantError("no atom separates a cover step; lattice is not atomistic");
    }
    y = lat.join(y, *pick);
  }

  if (lat.meet(x, y) != a || lat.join(x, y) != b ||
      lat.rank_of(x) + lat.rank_of(y) != lat.rank_of(a) + lat.rank_of(b)) {
    throw InvariantError("constructed element " + lat.set_of(y).to_string() +
                         " is not a modular complement of " +
                         lat.set_of(x).to_string());
  }
  return y;
}

VerificationReport check_atom_sublattice(const Lattice& lat,
                                         std::span<const ElementId> atoms,
                                         const SubLattice& sub) {
  VerificationReport report;
  const Lattice& lb = sub.lattice;
  const auto to_parent = [&](ElementId z) { return sub.to_parent[static_cast<std::size_t>(z)]; };

  const auto geometric = verify_geometric(lb);
  report.add("geometric", geometric.passed(),
             geometric.passed() ? "L(B) is a geometric lattice" : geometric.failures());

  std::vector<ElementId> expected(atoms.begin(), atoms.end());
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  std::vector<ElementId> got;
  for (ElementId a : lb.atoms()) got.push_back(to_parent(a));
  std::sort(got.begin(), got.end());
  report.add("atoms-equal-B", got == expected,
             std::to_string(got.size()) + " atoms, |B| = " + std::to_string(expected.size()));

  const ElementId join_b = lat.join_all(expected);
  report.add("rank", lb.rank() == lat.rank_of(join_b),
             "rank " + std::to_string(lb.rank()) + ", r(join B) = " +
                 std::to_string(lat.rank_of(join_b)));
  report.add("top-is-join-B", lb.bounded() && to_parent(lb.top()) == join_b,
             "top of L(B) is the join of B in L");
  report.add("bottom", lb.bounded() && to_parent(lb.bottom()) == lat.bottom(),
             "bottoms coincide");

  bool order_ok = true;
  bool covers_ok = true;
  std::string cover_detail = "inclusion preserves covers";
  for (ElementId x = 0; x < lb.size(); ++x) {
    for (ElementId y = 0; y < lb.size(); ++y) {
      if (lb.leq(x, y) != lat.leq(to_parent(x), to_parent(y))) order_ok = false;
    }
    for (ElementId y : lb.covers_up(x)) {
      if (!lat.covered_by(to_parent(x), to_parent(y)) && covers_ok) {
        covers_ok = false;
        cover_detail = "cover " + lb.set_of(x).to_string() + " < " +
                       lb.set_of(y).to_string() + " is not a cover in L";
      }
    }
  }
  report.add("order-preserving", order_ok, "inclusion map is an order embedding");
  report.add("cover-preserving", covers_ok, cover_detail);
  report.add("finite", lb.size() <= lat.size(),
             "|L(B)| = " + std::to_string(lb.size()));

  if (join_b == lat.top()) {
    bool hyper_ok = true;
    for (ElementId h : lb.hyperplanes()) {
      if (!lat.is_hyperplane(to_parent(h))) hyper_ok = false;
    }
    report.add("hyperplanes-inherited", hyper_ok,
               "hyperplanes of L(B) are hyperplanes of L");
  } else {
    report.add("hyperplanes-inherited", true, "not applicable: join of B is not the top");
  }
  return report;
}

AtomSublattice atom_sublattice(const Lattice& lat, std::span<const ElementId> atoms) {
  for (ElementId a : atoms) {
    if (a < 0 || a >= lat.size() || !lat.is_atom(a)) {
      throw PreconditionError("element " + std::to_string(a) + " is not an atom");
    }
  }
  // Worklist fixed point: each new member is joined with every member so far.
  std::vector<ElementId> members{lat.bottom()};
  std::unordered_set<ElementId> present{lat.bottom()};
  for (ElementId a : atoms) {
    if (present.insert(a).second) members.push_back(a);
  }
  for (std::size_t next = 0; next < members.size(); ++next) {
    for (std::size_t other = 0; other < next; ++other) {
      const ElementId j = lat.join(members[next], members[other]);
      if (present.insert(j).second) members.push_back(j);
    }
  }

  std::vector<Subset> sets;
  sets.reserve(members.size());
  for (ElementId m : members) sets.push_back(lat.set_of(m));
  SubLattice sub{Lattice::from_family(std::move(sets)), {}};
  for (ElementId z = 0; z < sub.lattice.size(); ++z) {
    sub.to_parent.push_back(lat.index_of(sub.lattice.set_of(z)));
  }

  VerificationReport conclusions = check_atom_sublattice(lat, atoms, sub);
  if (!conclusions.passed()) {
    throw InvariantError("L(B) conclusions failed:\n" + conclusions.failures());
  }
  return {std::move(sub), std::move(conclusions)};
}

}  // namespace flatmatch
