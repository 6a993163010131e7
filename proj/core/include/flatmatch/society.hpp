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

#ifndef FLATMATCH_SOCIETY_HPP_
#define FLATMATCH_SOCIETY_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flatmatch/lattice.hpp"

namespace flatmatch {

// (m, w) with m a label in M and w a label in W.
using Edge = std::pair<int, int>;

// A society (M, W, K): M and W are finite sets of integer labels living in
// separate namespaces, so they are disjoint by construction, and K is a subset
// of M x W. All vectors are kept sorted and duplicate free.
class Society {
 public:
  Society() = default;
  // Throws PreconditionError if an edge leaves M x W.
  Society(std::vector<int> men, std::vector<int> women, std::vector<Edge> edges);
  // M = {0..m-1}, W = {0..w-1}.
  static Society with_counts(int m, int w, std::vector<Edge> edges);

  const std::vector<int>& men() const { return men_; }
  const std::vector<int>& women() const { return women_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_man(int m) const;
  bool has_woman(int w) const;
  bool has_edge(int m, int w) const;

  // K[m] and K[A].
  std::vector<int> neighbors(int m) const;
  std::vector<int> neighbors(std::span<const int> men) const;
  // K^{-1}[w].
  std::vector<int> suitors(int w) const;

  // Subsociety Λ[A, X]: keeps the edges of K inside A x X.
  Society induced(std::span<const int> men, std::span<const int> women) const;
  // Λ - B.
  Society without_men(std::span<const int> men) const;
  // Λ / Π.
  Society quotient(const Society& sub) const;

  friend bool operator==(const Society&, const Society&) = default;

 private:
  std::vector<int> men_;
  std::vector<int> women_;
  std::vector<Edge> edges_;
};

// A partial injective map M -> W inside K, sorted by man.
struct Espousal {
  std::vector<Edge> pairs;

  std::size_t size() const { return pairs.size(); }
  std::optional<int> partner_of(int m) const;
  std::vector<int> domain() const;
  std::vector<int> image() const;
};

// The atom/hyperplane incidence society of a geometric lattice: M = atom ids,
// W = hyperplane ids, K = {(p, h) : p <= h}. Throws PreconditionError when the
// rank is below 3.
Society lattice_society(const Lattice& lat);

struct MaxEspousal {
  Espousal espousal;
  std::vector<int> unmatched;
};
// Maximum espousal by augmenting paths. Men are processed in ascending order
// unless `descending` is set; neighbours are always tried lowest first.
MaxEspousal max_espousal(const Society& soc, bool descending = false);

// δ(Λ): fewest men whose removal leaves a society with a total espousal.
int deficiency(const Society& soc);

// Has a total espousal and every total espousal is onto W.
bool is_critical(const Society& soc);

bool is_subsociety(const Society& sub, const Society& soc);
// K_Λ[M_Π] ⊆ W_Π. Throws PreconditionError if `sub` is not a subsociety.
bool is_saturated(const Society& sub, const Society& soc);

// Finite obstruction: Π saturated in Λ, A ⊆ M_Π with |A| = κ, and an espousal
// of Π - A that is a bijection onto W_Π.
struct ObstructionWitness {
  Society pi;
  std::vector<int> removed;
  int kappa = 0;
  Espousal critical;
};

// nullopt iff the society has a total espousal. Otherwise Π = Λ[A*, K[A*]]
// where A* is the set of men reachable by alternating paths from the men left
// unmatched by a maximum espousal; then κ = |A*| - |K[A*]| = δ(Λ).
std::optional<ObstructionWitness> extract_obstruction(const Society& soc);

struct ObstructionVerdict {
  bool ok = true;
  std::string failed_clause;  // empty when ok
  std::string detail;
};
// Independent re-check of every witness clause, in the order subsociety,
// saturated, critical, deficiency, kappa.
ObstructionVerdict verify_obstruction(const ObstructionWitness& witness,
                                      const Society& soc);

// {"M": int, "W": int, "edges": [[m, w], ...]}, optionally with
// "kind": "society". Throws ParseError.
Society parse_society(std::string_view text);

// True when the text is a society file rather than a matroid instance.
bool looks_like_society(std::string_view text);

}  // namespace flatmatch

#endif  // FLATMATCH_SOCIETY_HPP_
