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
#include <cstdint>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "flatmatch/errors.hpp"
#include "flatmatch/matroid.hpp"

namespace flatmatch {
namespace {

constexpr int kExhaustiveEnumerationLimit = 20;

void check_ground_size(int n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw ValidationError("ground-size", "ground set size " + std::to_string(n) +
                                             " outside [0, 64]");
  }
}

// Rank of an edge subset: size of a spanning forest.
int graphic_rank(const GraphicKind& g, Subset s) {
  std::vector<int> parent(static_cast<std::size_t>(g.vertices));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  int rank = 0;
  for (int e : s.elements()) {
    const int a = find(g.edges[e].first);
    const int b = find(g.edges[e].second);
    if (a != b) {
      parent[a] = b;
      ++rank;
    }
  }
  return rank;
}

// Minimal strict supersets of `family[i]` within `family`.
std::vector<std::vector<std::size_t>> family_covers(
    const std::vector<Subset>& family) {
  const std::size_t n = family.size();
  std::vector<std::vector<std::size_t>> covers(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> above;
    for (std::size_t j = 0; j < n; ++j) {
      if (family[i].is_proper_subset_of(family[j])) above.push_back(j);
    }
    for (std::size_t j : above) {
      bool minimal = true;
      for (std::size_t k : above) {
        if (k != j && family[k].is_proper_subset_of(family[j])) {
          minimal = false;
          break;
        }
      }
      if (minimal) covers[i].push_back(j);
    }
  }
  return covers;
}

}  // namespace

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int gf_rank(int prime, const std::vector<std::vector<int>>& columns) {
  if (columns.empty()) return 0;
  // Row rank of the transposed matrix equals the column rank.
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(columns.size());
  for (const auto& c : columns) {
    rows.emplace_back(c.begin(), c.end());
  }
  const std::size_t width = rows.front().size();
  auto inverse = [prime](std::int64_t a) {
    // Fermat: a^(p-2).
    std::int64_t result = 1;
    std::int64_t base = a % prime;
    for (int e = prime - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * base % prime;
      base = base * base % prime;
    }
    return result;
  };
  int rank = 0;
  for (std::size_t col = 0; col < width && rank < static_cast<int>(rows.size());
       ++col) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][col] % prime == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    auto& prow = rows[static_cast<std::size_t>(rank)];
    const std::int64_t inv = inverse(prow[col]);
    for (auto& v : prow) v = v * inv % prime;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank)) continue;
      const std::int64_t factor = rows[r][col] % prime;
      if (factor == 0) continue;
      for (std::size_t c = col; c < width; ++c) {
        rows[r][c] = ((rows[r][c] - factor * prow[c]) % prime + prime) % prime;
      }
    }
    ++rank;
  }
  return rank;
}

MatroidSpec MatroidSpec::uniform(int k, int n) {
  check_ground_size(n);
  if (k < 0 || k > n) {
    throw ValidationError("uniform-rank", "uniform matroid needs 0 <= k <= n, got k=" +
                                              std::to_string(k) + " n=" +
                                              std::to_string(n));
  }
  return MatroidSpec(n, UniformKind{k});
}

MatroidSpec MatroidSpec::graphic(int vertices,
                                 std::vector<std::pair<int, int>> edges) {
  check_ground_size(static_cast<int>(edges.size()));
  if (vertices < 0) {
    throw ValidationError("graph-vertices", "negative vertex count");
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
      throw ValidationError("graph-edge", "edge " + std::to_string(i) +
                                              " has an endpoint outside [0, " +
                                              std::to_string(vertices) + ")");
    }
  }
  const int n = static_cast<int>(edges.size());
  return MatroidSpec(n, GraphicKind{vertices, std::move(edges)});
}

MatroidSpec MatroidSpec::linear(int prime,
                                std::vector<std::vector<int>> columns) {
  check_ground_size(static_cast<int>(columns.size()));
  if (!is_prime(prime)) {
    throw ValidationError("field-prime",
                          "field order " + std::to_string(prime) + " is not prime");
  }
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].size() != columns.front().size()) {
      throw ValidationError("column-length", "column " + std::to_string(i) +
                                                 " has a different length");
    }
    for (int v : columns[i]) {
      if (v < 0 || v >= prime) {
        throw ValidationError("column-residue",
                              "column " + std::to_string(i) + " entry " +
                                  std::to_string(v) + " is not a residue mod " +
                                  std::to_string(prime));
      }
    }
  }
  const int n = static_cast<int>(columns.size());
  return MatroidSpec(n, LinearKind{prime, std::move(columns)});
}

MatroidSpec MatroidSpec::explicit_flats(int n, std::vector<Subset> flats) {
  check_ground_size(n);
  const Subset ground = Subset::full(n);
  for (Subset f : flats) {
    if (!f.is_subset_of(ground)) {
      throw ValidationError("flat-range", "flat " + f.to_string() +
                                              " is not inside the ground set");
    }
  }
  std::sort(flats.begin(), flats.end(),
            [](Subset a, Subset b) { return a.bits() < b.bits(); });
  flats.erase(std::unique(flats.begin(), flats.end()), flats.end());

  std::unordered_set<Subset> present(flats.begin(), flats.end());
  if (!present.contains(ground)) {
    throw ValidationError("ground-is-flat", "the ground set " + ground.to_string() +
                                                " is missing from the flats");
  }
  for (std::size_t i = 0; i < flats.size(); ++i) {
    for (std::size_t j = i + 1; j < flats.size(); ++j) {
      const Subset meet = flats[i] & flats[j];
      if (!present.contains(meet)) {
        throw ValidationError(
            "intersection-closed",
            "intersection of " + flats[i].to_string() + " and " +
                flats[j].to_string() + " is not a flat");
      }
    }
  }

  const auto covers = family_covers(flats);
  for (std::size_t i = 0; i < flats.size(); ++i) {
    Subset seen;
    for (std::size_t j : covers[i]) {
      const Subset added = flats[j] - flats[i];
      if (!(seen & added).empty()) {
        throw ValidationError("cover-partition",
                              "covers of flat " + flats[i].to_string() +
                                  " overlap outside it");
      }
      seen |= added;
    }
    if (seen != ground - flats[i]) {
      throw ValidationError("cover-partition",
                            "covers of flat " + flats[i].to_string() +
                                " do not exhaust its complement");
    }
  }

  // Longest-chain rank, relaxing covers in order of increasing size.
  std::vector<std::size_t> order(flats.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return flats[a].size() < flats[b].size();
  });
  std::vector<int> ranks(flats.size(), 0);
  for (std::size_t i : order) {
    for (std::size_t j : covers[i]) ranks[j] = std::max(ranks[j], ranks[i] + 1);
  }
  for (std::size_t i = 0; i < flats.size(); ++i) {
    for (std::size_t j : covers[i]) {
      if (ranks[j] != ranks[i] + 1) {
        throw ValidationError("chain-length",
                              "maximal chains below " + flats[j].to_string() +
                                  " have different lengths");
      }
    }
  }

  MatroidSpec spec(n, FlatsKind{std::move(flats)});
  spec.flat_ranks_ = std::move(ranks);
  return spec;
}

std::string_view MatroidSpec::kind_name() const {
  struct Visitor {
    std::string_view operator()(const UniformKind&) const { return "uniform"; }
    std::string_view operator()(const GraphicKind&) const { return "graphic"; }
    std::string_view operator()(const LinearKind&) const { return "linear"; }
    std::string_view operator()(const FlatsKind&) const { return "flats"; }
  };
  return std::visit(Visitor{}, kind_);
}

int MatroidSpec::rank(Subset s) const {
  s &= ground();
  if (const auto* u = std::get_if<UniformKind>(&kind_)) {
    return std::min(s.size(), u->k);
  }
  if (const auto* g = std::get_if<GraphicKind>(&kind_)) {
    return graphic_rank(*g, s);
  }
  if (const auto* l = std::get_if<LinearKind>(&kind_)) {
    std::vector<std::vector<int>> selected;
    for (int e : s.elements()) selected.push_back(l->columns[e]);
    return gf_rank(l->prime, selected);
  }
  const auto& fk = std::get<FlatsKind>(kind_);
  const Subset cl = closure(s);
  const auto it = std::find(fk.flats.begin(), fk.flats.end(), cl);
  return flat_ranks_[static_cast<std::size_t>(it - fk.flats.begin())];
}

Subset MatroidSpec::closure(Subset s) const {
  s &= ground();
  if (const auto* fk = std::get_if<FlatsKind>(&kind_)) {
    Subset cl = ground();
    for (Subset f : fk->flats) {
      if (s.is_subset_of(f)) cl &= f;
    }
    return cl;
  }
  const int base = rank(s);
  Subset cl = s;
  for (int e = 0; e < n_; ++e) {
    if (!s.contains(e) && rank(s.with(e)) == base) cl.insert(e);
  }
  return cl;
}

std::vector<Subset> enumerate_flats(const MatroidSpec& spec, std::size_t cap) {
  const int n = spec.ground_size();
  std::unordered_set<Subset> seen;
  std::vector<Subset> flats;
  auto record = [&](Subset f) {
    if (seen.insert(f).second) {
      flats.push_back(f);
      if (flats.size() > cap) throw CapExceeded(flats.size(), cap);
    }
  };

  if (n <= kExhaustiveEnumerationLimit) {
    // closure(S) = closure(closure(S - max) + max), memoized over all subsets.
    const std::size_t count = std::size_t{1} << n;
    std::vector<Subset> memo(count);
    std::unordered_map<Subset, Subset> extended;
    memo[0] = spec.closure(Subset());
    record(memo[0]);
    for (std::size_t bits = 1; bits < count; ++bits) {
      const Subset s(bits);
      const int top = s.max();
      const Subset prev = memo[s.without(top).bits()];
      if (prev.contains(top)) {
        memo[bits] = prev;
        continue;
      }
      const Subset arg = prev.with(top);
      auto it = extended.find(arg);
      if (it == extended.end()) {
        it = extended.emplace(arg, spec.closure(arg)).first;
      }
      memo[bits] = it->second;
      record(it->second);
    }
  } else {
    // Breadth-first over covers closure(F + e).
    std::queue<Subset> frontier;
    const Subset bottom = spec.closure(Subset());
    record(bottom);
    frontier.push(bottom);
    while (!frontier.empty()) {
      const Subset f = frontier.front();
      frontier.pop();
      Subset handled = f;
      for (int e = 0; e < n; ++e) {
        if (handled.contains(e)) continue;
        const Subset cover = spec.closure(f.with(e));
        handled |= cover;
        if (!seen.contains(cover)) {
          record(cover);
          frontier.push(cover);
        }
      }
    }
  }

  std::vector<std::pair<int, Subset>> keyed;
  keyed.reserve(flats.size());
  for (Subset f : flats) keyed.emplace_back(spec.rank(f), f);
  std::sort(keyed.begin(), keyed.end(), RankLexLess{});
  std::vector<Subset> out;
  out.reserve(keyed.size());
  for (const auto& [r, f] : keyed) out.push_back(f);
  return out;
}

}  // namespace flatmatch
