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
#include <bit>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "flatmatch/errors.hpp"
#include "flatmatch/lattice.hpp"

namespace flatmatch {
namespace {

constexpr int kTableLimit = 4096;

}  // namespace

Lattice Lattice::from_family(std::vector<Subset> sets) {
  if (sets.empty()) throw PreconditionError("a poset needs at least one element");
  std::sort(sets.begin(), sets.end(),
            [](Subset a, Subset b) { return a.bits() < b.bits(); });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  const std::size_t n = sets.size();
  std::vector<std::vector<std::size_t>> covers(n);
  std::vector<std::size_t> above;
  for (std::size_t i = 0; i < n; ++i) {
    above.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (sets[i].is_proper_subset_of(sets[j])) above.push_back(j);
    }
    for (std::size_t j : above) {
      const bool minimal = std::none_of(above.begin(), above.end(), [&](std::size_t k) {
        return sets[k].is_proper_subset_of(sets[j]);
      });
      if (minimal) covers[i].push_back(j);
    }
  }
  return assemble(std::move(sets), covers);
}

Lattice Lattice::assemble(std::vector<Subset> sets,
                          const std::vector<std::vector<std::size_t>>& covers) {
  const std::size_t n = sets.size();
  // Longest chain from a minimal element; inclusion strictly grows the size.
  std::vector<std::size_t> by_size(n);
  std::iota(by_size.begin(), by_size.end(), 0);
  std::stable_sort(by_size.begin(), by_size.end(), [&](std::size_t a, std::size_t b) {
    return sets[a].size() < sets[b].size();
  });
  std::vector<int> rank(n, 0);
  for (std::size_t i : by_size) {
    for (std::size_t j : covers[i]) rank[j] = std::max(rank[j], rank[i] + 1);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return RankLexLess{}({rank[a], sets[a]}, {rank[b], sets[b]});
  });
  std::vector<ElementId> renumber(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    renumber[order[pos]] = static_cast<ElementId>(pos);
  }

  Lattice lat;
  lat.sets_.resize(n);
  lat.ranks_.resize(n);
  lat.up_.resize(n);
  lat.down_.resize(n);
  for (std::size_t old = 0; old < n; ++old) {
    const auto id = static_cast<std::size_t>(renumber[old]);
    lat.sets_[id] = sets[old];
    lat.ranks_[id] = rank[old];
    for (std::size_t j : covers[old]) {
      lat.up_[id].push_back(renumber[j]);
      lat.down_[static_cast<std::size_t>(renumber[j])].push_back(
          static_cast<ElementId>(id));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(lat.up_[i].begin(), lat.up_[i].end());
    std::sort(lat.down_[i].begin(), lat.down_[i].end());
    lat.index_.emplace(lat.sets_[i], static_cast<ElementId>(i));
  }

  const auto minimal = std::count(lat.ranks_.begin(), lat.ranks_.end(), 0);
  if (minimal == 1) lat.bottom_ = 0;
  ElementId maximal = kNoElement;
  int maximal_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (lat.up_[i].empty()) {
      maximal = static_cast<ElementId>(i);
      ++maximal_count;
    }
  }
  if (maximal_count == 1) lat.top_ = maximal;
  lat.height_ = lat.top_ != kNoElement
                    ? lat.ranks_[static_cast<std::size_t>(lat.top_)]
                    : *std::max_element(lat.ranks_.begin(), lat.ranks_.end());
  if (lat.bottom_ != kNoElement) lat.atoms_ = lat.up_[0];
  if (lat.top_ != kNoElement) lat.hyperplanes_ = lat.covers_down(lat.top_);

  if (n <= static_cast<std::size_t>(kTableLimit)) {
    lat.words_ = (n + 63) / 64;
    lat.upsets_.assign(n * lat.words_, 0);
    lat.downsets_.assign(n * lat.words_, 0);
    for (std::size_t x = 0; x < n; ++x) {
      // Elements above x have larger ids.
      for (std::size_t y = x; y < n; ++y) {
        if (lat.sets_[x].is_subset_of(lat.sets_[y])) {
          lat.upsets_[x * lat.words_ + y / 64] |= std::uint64_t{1} << (y % 64);
          lat.downsets_[y * lat.words_ + x / 64] |= std::uint64_t{1} << (x % 64);
        }
      }
    }
  }
  return lat;
}

std::vector<ElementId> Lattice::elements_of_rank(int r) const {
  std::vector<ElementId> out;
  for (int x = 0; x < size(); ++x) {
    if (rank_of(x) == r) out.push_back(x);
  }
  return out;
}

bool Lattice::covered_by(ElementId x, ElementId y) const {
  const auto& ups = covers_up(x);
  return std::binary_search(ups.begin(), ups.end(), y);
}

bool Lattice::is_atom(ElementId x) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), x);
}

bool Lattice::is_hyperplane(ElementId x) const {
  return std::binary_search(hyperplanes_.begin(), hyperplanes_.end(), x);
}

std::optional<ElementId> Lattice::find(Subset s) const {
  const auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId Lattice::index_of(Subset s) const {
  const auto found = find(s);
  if (!found) throw PreconditionError("set " + s.to_string() + " is not an element");
  return *found;
}

std::optional<ElementId> Lattice::try_meet(ElementId x, ElementId y) const {
  if (const auto direct = find(set_of(x) & set_of(y))) return direct;
  if (!has_tables()) return scan_meet(x, y);
  const std::uint64_t* dx = &downsets_[idx(x) * words_];
  const std::uint64_t* dy = &downsets_[idx(y) * words_];
  for (std::size_t w = words_; w-- > 0;) {
    const std::uint64_t common = dx[w] & dy[w];
    if (common == 0) continue;
    // Highest id has the highest rank among common lower bounds.
    const auto c = static_cast<ElementId>(w * 64 + 63 - std::countl_zero(common));
    const std::uint64_t* dc = &downsets_[idx(c) * words_];
    for (std::size_t v = 0; v < words_; ++v) {
      if (dc[v] != (dx[v] & dy[v])) return std::nullopt;
    }
    return c;
  }
  return std::nullopt;
}

std::optional<ElementId> Lattice::try_join(ElementId x, ElementId y) const {
  if (const auto direct = find(set_of(x) | set_of(y))) return direct;
  if (!has_tables()) return scan_join(x, y);
  const std::uint64_t* ux = &upsets_[idx(x) * words_];
  const std::uint64_t* uy = &upsets_[idx(y) * words_];
  for (std::size_t w = 0; w < words_; ++w) {
    const std::uint64_t common = ux[w] & uy[w];
    if (common == 0) continue;
    const auto c = static_cast<ElementId>(w * 64 + std::countr_zero(common));
    const std::uint64_t* uc = &upsets_[idx(c) * words_];
    for (std::size_t v = 0; v < words_; ++v) {
      if (uc[v] != (ux[v] & uy[v])) return std::nullopt;
    }
    return c;
  }
  return std::nullopt;
}

std::optional<ElementId> Lattice::scan_join(ElementId x, ElementId y) const {
  const Subset both = set_of(x) | set_of(y);
  ElementId best = kNoElement;
  for (ElementId z = 0; z < size(); ++z) {
    if (!both.is_subset_of(set_of(z))) continue;
    if (best == kNoElement) {
      best = z;
    } else if (!leq(best, z)) {
      return std::nullopt;
    }
  }
  if (best == kNoElement) return std::nullopt;
  return best;
}

std::optional<ElementId> Lattice::scan_meet(ElementId x, ElementId y) const {
  ElementId best = kNoElement;
  for (ElementId z = size() - 1; z >= 0; --z) {
    if (!(leq(z, x) && leq(z, y))) continue;
    if (best == kNoElement) {
      best = z;
    } else if (!leq(z, best)) {
      return std::nullopt;
    }
  }
  if (best == kNoElement) return std::nullopt;
  return best;
}

ElementId Lattice::meet(ElementId x, ElementId y) const {
  const auto m = try_meet(x, y);
  if (!m) {
    throw InvariantError("elements " + std::to_string(x) + " and " +
                         std::to_string(y) + " have no meet");
  }
  return *m;
}

ElementId Lattice::join(ElementId x, ElementId y) const {
  const auto j = try_join(x, y);
  if (!j) {
    throw InvariantError("elements " + std::to_string(x) + " and " +
                         std::to_string(y) + " have no join");
  }
  return *j;
}

ElementId Lattice::join_all(std::span<const ElementId> xs) const {
  if (bottom_ == kNoElement) throw InvariantError("empty join without a bottom");
  ElementId acc = bottom_;
  for (ElementId x : xs) acc = join(acc, x);
  return acc;
}

Lattice build_lattice(const MatroidSpec& spec, std::size_t flat_cap) {
  if (spec.rank() == 0) {
    throw PreconditionError("matroid has rank 0; its lattice of flats is trivial");
  }
  std::vector<Subset> flats = enumerate_flats(spec, flat_cap);
  std::unordered_map<Subset, std::size_t> position;
  for (std::size_t i = 0; i < flats.size(); ++i) position.emplace(flats[i], i);

  const Subset ground = spec.ground();
  std::vector<std::vector<std::size_t>> covers(flats.size());
  for (std::size_t i = 0; i < flats.size(); ++i) {
    Subset handled = flats[i];
    for (int e : (ground - flats[i]).elements()) {
      if (handled.contains(e)) continue;
      const Subset cover = spec.closure(flats[i].with(e));
      handled |= cover;
      covers[i].push_back(position.at(cover));
    }
  }
  return Lattice::assemble(std::move(flats), covers);
}

SubLattice interval(const Lattice& lat, ElementId lo, ElementId hi) {
  if (!lat.leq(lo, hi)) {
    throw PreconditionError("interval endpoints are not ordered");
  }
  std::vector<Subset> members;
  for (ElementId z = lo; z <= hi; ++z) {
    if (lat.leq(lo, z) && lat.leq(z, hi)) members.push_back(lat.set_of(z));
  }
  SubLattice out{Lattice::from_family(std::move(members)), {}};
  out.to_parent.reserve(static_cast<std::size_t>(out.lattice.size()));
  for (ElementId z = 0; z < out.lattice.size(); ++z) {
    out.to_parent.push_back(lat.index_of(out.lattice.set_of(z)));
  }
  return out;
}

}  // namespace flatmatch
