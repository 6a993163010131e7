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

#ifndef FLATMATCH_LATTICE_HPP_
#define FLATMATCH_LATTICE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flatmatch/matroid.hpp"
#include "flatmatch/report.hpp"
#include "flatmatch/subset.hpp"

namespace flatmatch {

using ElementId = int;
inline constexpr ElementId kNoElement = -1;

// A finite poset whose elements are distinct subsets of a ground set ordered
// by inclusion. For a lattice of flats each element is a flat and the order is
// the geometric lattice order.
//
// Elements are numbered 0..N-1 in (rank, lex) order, where rank is the length
// of the longest chain from a minimal element. Since rank strictly increases
// along covers, lower indices never lie above higher ones.
class Lattice {
 public:
  // Builds the inclusion order on `sets` (duplicates are merged). Accepts
  // arbitrary families so that non-geometric posets can be checked.
  static Lattice from_family(std::vector<Subset> sets);

  int size() const { return static_cast<int>(sets_.size()); }
  // kNoElement when the poset has no least (resp. greatest) element.
  ElementId bottom() const { return bottom_; }
  ElementId top() const { return top_; }
  bool bounded() const { return bottom_ != kNoElement && top_ != kNoElement; }
  // Height of the poset: rank of the top element.
  int rank() const { return height_; }

  Subset set_of(ElementId x) const { return sets_[idx(x)]; }
  int rank_of(ElementId x) const { return ranks_[idx(x)]; }
  const std::vector<ElementId>& covers_up(ElementId x) const { return up_[idx(x)]; }
  const std::vector<ElementId>& covers_down(ElementId x) const {
    return down_[idx(x)];
  }
  const std::vector<ElementId>& atoms() const { return atoms_; }
  const std::vector<ElementId>& hyperplanes() const { return hyperplanes_; }
  std::vector<ElementId> elements_of_rank(int r) const;

  bool leq(ElementId x, ElementId y) const {
    return set_of(x).is_subset_of(set_of(y));
  }
  // x is covered by y.
  bool covered_by(ElementId x, ElementId y) const;
  bool is_atom(ElementId x) const;
  bool is_hyperplane(ElementId x) const;

  std::optional<ElementId> find(Subset s) const;
  // Throws PreconditionError if `s` is not an element.
  ElementId index_of(Subset s) const;

  // nullopt when the pair has no greatest lower (least upper) bound.
  std::optional<ElementId> try_meet(ElementId x, ElementId y) const;
  std::optional<ElementId> try_join(ElementId x, ElementId y) const;
  // Throw InvariantError when the bound does not exist.
  ElementId meet(ElementId x, ElementId y) const;
  ElementId join(ElementId x, ElementId y) const;
  // Join of a set of elements; the empty join is the bottom.
  ElementId join_all(std::span<const ElementId> xs) const;

 private:
  friend Lattice build_lattice(const MatroidSpec& spec, std::size_t flat_cap);

  Lattice() = default;
  // `covers[i]` lists the indices of the sets covering sets[i].
  static Lattice assemble(std::vector<Subset> sets,
                          const std::vector<std::vector<std::size_t>>& covers);
  std::size_t idx(ElementId x) const { return static_cast<std::size_t>(x); }
  bool has_tables() const { return !upsets_.empty(); }
  std::optional<ElementId> scan_join(ElementId x, ElementId y) const;
  std::optional<ElementId> scan_meet(ElementId x, ElementId y) const;

  std::vector<Subset> sets_;
  std::vector<int> ranks_;
  std::vector<std::vector<ElementId>> up_;
  std::vector<std::vector<ElementId>> down_;
  std::vector<ElementId> atoms_;
  std::vector<ElementId> hyperplanes_;
  std::unordered_map<Subset, ElementId> index_;
  ElementId bottom_ = kNoElement;
  ElementId top_ = kNoElement;
  int height_ = 0;
  // Per-element up-set and down-set bit rows over element ids; built only for
  // lattices small enough that N^2 bits stay cheap.
  std::size_t words_ = 0;
  std::vector<std::uint64_t> upsets_;
  std::vector<std::uint64_t> downsets_;
};

// A standalone lattice carved out of a parent, with the id of each of its
// elements in the parent.
struct SubLattice {
  Lattice lattice;
  std::vector<ElementId> to_parent;
};

// The lattice of flats of `spec`. Throws CapExceeded (propagated from
// enumerate_flats) and PreconditionError for rank-0 matroids.
Lattice build_lattice(const MatroidSpec& spec, std::size_t flat_cap = kDefaultFlatCap);

// Interval [lo, hi] as its own lattice.
SubLattice interval(const Lattice& lat, ElementId lo, ElementId hi);

// Checks, exhaustively: unique bottom and top with graded covers, existence of
// meets and joins, semimodularity, atomicity, and the submodular rank
// inequality. Failures carry a counterexample.
VerificationReport verify_geometric(const Lattice& lat);

struct ShadowSets {
  std::vector<ElementId> under;  // atoms below x
  std::vector<ElementId> over;   // hyperplanes above x
};
ShadowSets shadows(const Lattice& lat, ElementId x);

struct ShadowInequalityReport {
  std::size_t pairs_checked = 0;
  // Minimum of |over(p)| - |under(h)| over non-incident pairs; 0 if none.
  int min_slack = 0;
  std::optional<std::pair<ElementId, ElementId>> violation;  // (p, h)
  bool passed() const { return !violation.has_value(); }
};
// For every atom p and hyperplane h with p not below h: |under(h)| <= |over(p)|.
ShadowInequalityReport check_shadow_inequality(const Lattice& lat);

// A y in [a, b] with x ^ y = a, x v y = b and r(x) + r(y) = r(a) + r(b),
// built from a maximal chain x = c0 < c1 < ... < ck = b by adding, for each
// step, the lowest-indexed atom below c_i and not below c_{i-1}. Throws
// PreconditionError unless a <= x <= b.
ElementId modular_complement(const Lattice& lat, ElementId a, ElementId b,
                             ElementId x);

struct AtomSublattice {
  SubLattice sub;
  // Conclusions about L(B) checked on construction; all pass or the
  // constructor throws.
  VerificationReport conclusions;
};
// Join-closure of the atom set `atoms` (all finite joins, including the empty
// one), by fixed-point iteration on pairwise joins. Throws PreconditionError if
// some id is not an atom and InvariantError if a conclusion fails.
AtomSublattice atom_sublattice(const Lattice& lat, std::span<const ElementId> atoms);

// Re-derives the conclusions for an already built L(B).
VerificationReport check_atom_sublattice(const Lattice& lat,
                                         std::span<const ElementId> atoms,
                                         const SubLattice& sub);

// {under(k) - under(x) : x covered by k} partitions atoms - under(x).
CheckResult check_cover_partition(const Lattice& lat, ElementId x);

// For each element h and distinct lower covers x', x'' of h, the common upper
// bounds of x' and x'' are exactly the elements above h.
CheckResult check_lower_cover_upsets(const Lattice& lat);

// No u != u' and v != v' with u, u' both covered by v and by v'.
CheckResult check_no_crown(const Lattice& lat);

}  // namespace flatmatch

#endif  // FLATMATCH_LATTICE_HPP_
