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
#include <climits>
#include <functional>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "flatmatch/errors.hpp"
#include "flatmatch/society.hpp"
#include "json_util.hpp"

namespace flatmatch {
namespace {

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool contains_sorted(const std::vector<int>& v, int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

std::size_t position(const std::vector<int>& sorted, int label) {
  return static_cast<std::size_t>(
      std::lower_bound(sorted.begin(), sorted.end(), label) - sorted.begin());
}

}  // namespace

Society::Society(std::vector<int> men, std::vector<int> women, std::vector<Edge> edges)
    : men_(std::move(men)), women_(std::move(women)), edges_(std::move(edges)) {
  sort_unique(men_);
  sort_unique(women_);
  sort_unique(edges_);
  for (const auto& [m, w] : edges_) {
    if (!has_man(m) || !has_woman(w)) {
      throw PreconditionError("edge (" + std::to_string(m) + ", " + std::to_string(w) +
                              ") is not in M x W");
    }
  }
}

Society Society::with_counts(int m, int w, std::vector<Edge> edges) {
  std::vector<int> men(static_cast<std::size_t>(std::max(m, 0)));
  std::vector<int> women(static_cast<std::size_t>(std::max(w, 0)));
  for (int i = 0; i < m; ++i) men[static_cast<std::size_t>(i)] = i;
  for (int j = 0; j < w; ++j) women[static_cast<std::size_t>(j)] = j;
  return Society(std::move(men), std::move(women), std::move(edges));
}

bool Society::has_man(int m) const { return contains_sorted(men_, m); }
bool Society::has_woman(int w) const { return contains_sorted(women_, w); }
bool Society::has_edge(int m, int w) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{m, w});
}

std::vector<int> Society::neighbors(int m) const {
  std::vector<int> out;
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{m, INT_MIN});
  for (; it != edges_.end() && it->first == m; ++it) out.push_back(it->second);
  return out;
}

std::vector<int> Society::neighbors(std::span<const int> men) const {
  std::vector<int> out;
  for (int m : men) {
    const auto n = neighbors(m);
    out.insert(out.end(), n.begin(), n.end());
  }
  sort_unique(out);
  return out;
}

std::vector<int> Society::suitors(int w) const {
  std::vector<int> out;
  for (const auto& [m, x] : edges_) {
    if (x == w) out.push_back(m);
  }
  return out;
}

Society Society::induced(std::span<const int> men, std::span<const int> women) const {
  std::vector<int> m(men.begin(), men.end());
  std::vector<int> w(women.begin(), women.end());
  sort_unique(m);
  sort_unique(w);
  std::vector<Edge> k;
  for (const auto& e : edges_) {
    if (contains_sorted(m, e.first) && contains_sorted(w, e.second)) k.push_back(e);
  }
  return Society(std::move(m), std::move(w), std::move(k));
}

Society Society::without_men(std::span<const int> men) const {
  std::vector<int> drop(men.begin(), men.end());
  sort_unique(drop);
  std::vector<int> keep;
  std::set_difference(men_.begin(), men_.end(), drop.begin(), drop.end(),
                      std::back_inserter(keep));
  return induced(keep, women_);
}

Society Society::quotient(const Society& sub) const {
  std::vector<int> m;
  std::vector<int> w;
  std::set_difference(men_.begin(), men_.end(), sub.men().begin(), sub.men().end(),
                      std::back_inserter(m));
  std::set_difference(women_.begin(), women_.end(), sub.women().begin(),
                      sub.women().end(), std::back_inserter(w));
  return induced(m, w);
}

std::optional<int> Espousal::partner_of(int m) const {
  const auto it = std::lower_bound(pairs.begin(), pairs.end(), Edge{m, INT_MIN});
  if (it == pairs.end() || it->first != m) return std::nullopt;
  return it->second;
}

std::vector<int> Espousal::domain() const {
  std::vector<int> out;
  for (const auto& [m, w] : pairs) out.push_back(m);
  return out;
}

std::vector<int> Espousal::image() const {
  std::vector<int> out;
  for (const auto& [m, w] : pairs) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

Society lattice_society(const Lattice& lat) {
  if (lat.rank() < 3) {
    throw PreconditionError("the atom/hyperplane society needs rank >= 3, got " +
                            std::to_string(lat.rank()));
  }
  std::vector<Edge> k;
  for (ElementId p : lat.atoms()) {
    for (ElementId h : lat.hyperplanes()) {
      if (lat.leq(p, h)) k.emplace_back(p, h);
    }
  }
  return Society(lat.atoms(), lat.hyperplanes(), std::move(k));
}

MaxEspousal max_espousal(const Society& soc, bool descending) {
  const auto& men = soc.men();
  const auto& women = soc.women();
  std::vector<std::vector<std::size_t>> adj(men.size());
  for (const auto& [m, w] : soc.edges()) {
    adj[position(men, m)].push_back(position(women, w));
  }
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> wife_of(men.size(), kFree);
  std::vector<std::size_t> husband_of(women.size(), kFree);
  std::vector<char> visited(women.size());

  // A free woman is taken before any reassignment, lowest index first, so
  // ties resolve to the lowest-indexed option the search can reach.
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (std::size_t j : adj[i]) {
      if (husband_of[j] == kFree) {
        husband_of[j] = i;
        wife_of[i] = j;
        return true;
      }
    }
    for (std::size_t j : adj[i]) {
      if (visited[j]) continue;
      visited[j] = 1;
      if (husband_of[j] == kFree || augment(husband_of[j])) {
        husband_of[j] = i;
        wife_of[i] = j;
        return true;
      }
    }
    return false;
  };

  std::vector<std::size_t> order(men.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = descending ? men.size() - 1 - i : i;
  }
  for (std::size_t i : order) {
    std::fill(visited.begin(), visited.end(), 0);
    augment(i);
  }

  MaxEspousal out;
  for (std::size_t i = 0; i < men.size(); ++i) {
    if (wife_of[i] == kFree) {
      out.unmatched.push_back(men[i]);
    } else {
      out.espousal.pairs.emplace_back(men[i], women[wife_of[i]]);
    }
  }
  return out;
}

int deficiency(const Society& soc) {
  return static_cast<int>(max_espousal(soc).unmatched.size());
}

bool is_critical(const Society& soc) {
  return soc.men().size() == soc.women().size() && deficiency(soc) == 0;
}

bool is_subsociety(const Society& sub, const Society& soc) {
  const auto inside = [](const std::vector<int>& small, const std::vector<int>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  if (!inside(sub.men(), soc.men()) || !inside(sub.women(), soc.women())) return false;
  return soc.induced(sub.men(), sub.women()).edges() == sub.edges();
}

bool is_saturated(const Society& sub, const Society& soc) {
  if (!is_subsociety(sub, soc)) {
    throw PreconditionError("society is not a subsociety of the given one");
  }
  const auto reach = soc.neighbors(sub.men());
  return std::includes(sub.women().begin(), sub.women().end(), reach.begin(),
                       reach.end());
}

bool looks_like_society(std::string_view text) {
  const auto doc = detail::parse_json_text(text);
  if (!doc.is_object()) return false;
  if (doc.contains("kind")) return doc["kind"] == "society";
  return doc.contains("M") && doc.contains("W");
}

Society parse_society(std::string_view text) {
  const auto doc = detail::parse_json_text(text);
  if (doc.is_object() && doc.contains("kind") && doc["kind"] != "society") {
    throw ParseError("expected a society instance", 0, "kind");
  }
  const int m = detail::require_int(doc, "M");
  const int w = detail::require_int(doc, "W");
  if (m < 0 || w < 0) throw ParseError("M and W must be non-negative", 0, "M");
  std::vector<Edge> edges;
  for (const auto& e : detail::require_array(doc, "edges")) {
    const auto pair = detail::int_list(e, "edges");
    if (pair.size() != 2) throw ParseError("each edge must be [m, w]", 0, "edges");
    if (pair[0] < 0 || pair[0] >= m || pair[1] < 0 || pair[1] >= w) {
      throw ParseError("edge [" + std::to_string(pair[0]) + ", " +
                           std::to_string(pair[1]) + "] is out of range",
                       0, "edges");
    }
    edges.emplace_back(pair[0], pair[1]);
  }
  return Society::with_counts(m, w, std::move(edges));
}

}  // namespace flatmatch
