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

#ifndef FLATMATCH_MATCHING_HPP_
#define FLATMATCH_MATCHING_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flatmatch/lattice.hpp"
#include "flatmatch/report.hpp"
#include "flatmatch/society.hpp"

namespace flatmatch {

// Atom id -> hyperplane id.
using Matching = std::map<ElementId, ElementId>;

struct MatchingVerdict {
  bool ok = true;
  std::string violation;  // first violation found
};
// Totality on the atoms, injectivity, and p <= f(p), checked against the order.
MatchingVerdict verify_matching(const Lattice& lat, const Matching& f);

// Rank 2: atoms and hyperplanes coincide, so p -> p.
Matching identity_matching(const Lattice& lat);

// Rank 2 -> identity; otherwise a maximum espousal of the atom/hyperplane
// society, which must be total. A non-total result throws InvariantError.
Matching match_hall(const Lattice& lat);

struct DegreeCheck {
  bool ok = true;
  // A man with no neighbours, or an edge (m, w) with |K^-1[w]| > |K[m]|.
  std::optional<int> isolated_man;
  std::optional<Edge> witness_edge;
  std::string detail;
};
// K[m] nonempty for all m and |K^-1[w]| <= |K[m]| on every edge.
DegreeCheck check_milner_shelah(const Society& soc);
// Total espousal of a society passing check_milner_shelah. Throws
// PreconditionError naming the witness when the check fails.
Espousal match_milner_shelah(const Society& soc);

// Matches a standalone lattice (used for the recursive interval calls).
using SubMatcher = std::function<Matching(const Lattice&)>;

struct CaseOutcome {
  std::optional<Matching> matching;
  // Why no matching was produced, or a summary of the choices made.
  std::string note;
  ElementId h0 = kNoElement;
  // Structural facts observed while building f.
  VerificationReport checks;
};

// Case 1 of the point/hyperplane construction: every cover of q other than l0
// covers exactly one other atom. Matches the rest of the atoms through the
// filter above q, and the atoms of l0 through covers of p v z, with z a modular
// complement of l0 below a hyperplane h0 >= l0. Returns no matching when the
// hypothesis fails or a choice set is empty.
CaseOutcome match_bjorner_case1(const Lattice& lat, ElementId q, ElementId l0,
                                const SubMatcher& recurse = match_hall);

// Case 2: q is covered by l0 != l1 and l1 covers at least three atoms. Picks a
// hyperplane h0 >= l0 missing two atoms of l1, matches the atoms below h0
// through a matching of the interval below h0, and the atoms outside h0
// through an injection into the lower covers of h0 lying under at least three
// hyperplanes. Returns no matching when that injection does not exist.
CaseOutcome match_bjorner_case2(const Lattice& lat, ElementId q, ElementId l0,
                                ElementId l1, const SubMatcher& recurse = match_hall);

// For the lower covers x of h0 and y = join of the atoms outside h0: x has
// exactly two hyperplanes above it iff x = h0 ^ h for some hyperplane h >= y.
// Also checks the cover partition at every such x.
VerificationReport check_case2_claim(const Lattice& lat, ElementId h0);

enum class Strategy { kHall, kMilnerShelah, kBjorner, kAuto };
std::optional<Strategy> parse_strategy(std::string_view name);
std::string_view strategy_name(Strategy s);

struct StrategyReport {
  Strategy requested = Strategy::kAuto;
  // identity, hall, milner-shelah, bjorner-case1 or bjorner-case2.
  std::string used;
  std::vector<std::string> preconditions;
  std::vector<std::string> fallbacks;
  // One line per decision, nested calls indented by depth.
  std::vector<std::string> trace;
  bool verified = false;
  std::string violation;
};

struct DispatchResult {
  Matching matching;
  StrategyReport report;
};

// Every returned matching has passed verify_matching; a failure throws
// InvariantError. Throws PreconditionError below rank 2.
DispatchResult match_dispatch(const Lattice& lat, Strategy strategy);

}  // namespace flatmatch

#endif  // FLATMATCH_MATCHING_HPP_
