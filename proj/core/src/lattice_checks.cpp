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
#include <iterator>
#include <string>
#include <unordered_map>
#include <vector>

#include "flatmatch/lattice.hpp"

namespace flatmatch {
namespace {

std::string name(const Lattice& lat, ElementId x) { return lat.set_of(x).to_string(); }

CheckResult check_bounded(const Lattice& lat) {
  if (lat.bottom() == kNoElement) return {"bounded", false, "no least element"};
  if (lat.top() == kNoElement) return {"bounded", false, "no greatest element"};
  return {"bounded", true,
          "bottom " + name(lat, lat.bottom()) + ", top " + name(lat, lat.top())};
}

// With longest-chain ranks, all maximal chains have equal length iff every
// cover raises the rank by exactly one.
CheckResult check_graded(const Lattice& lat) {
  for (ElementId x = 0; x < lat.size(); ++x) {
    for (ElementId y : lat.covers_up(x)) {
      if (lat.rank_of(y) != lat.rank_of(x) + 1) {
        return {"graded", false,
                "cover " + name(lat, x) + " < " + name(lat, y) +
                    " skips a rank; maximal chains differ in length"};
      }
    }
  }
  return {"graded", true, "height " + std::to_string(lat.rank())};
}

CheckResult check_lattice_ops(const Lattice& lat) {
  for (ElementId x = 0; x < lat.size(); ++x) {
    for (ElementId y = x + 1; y < lat.size(); ++y) {
      if (!lat.try_meet(x, y)) {
        return {"lattice", false, "no meet for " + name(lat, x) + ", " + name(lat, y)};
      }
      if (!lat.try_join(x, y)) {
        return {"lattice", false, "no join for " + name(lat, x) + ", " + name(lat, y)};
      }
    }
  }
  return {"lattice", true, "all meets and joins exist"};
}

CheckResult check_semimodular(const Lattice& lat) {
  std::vector<ElementId> common;
  for (ElementId a = 0; a < lat.size(); ++a) {
    const auto& ups = lat.covers_up(a);
    for (std::size_t i = 0; i < ups.size(); ++i) {
      for (std::size_t j = i + 1; j < ups.size(); ++j) {
        const auto& bi = lat.covers_up(ups[i]);
        const auto& cj = lat.covers_up(ups[j]);
        common.clear();
        std::set_intersection(bi.begin(), bi.end(), cj.begin(), cj.end(),
                              std::back_inserter(common));
        if (common.empty()) {
          return {"semimodular", false,
                  "(a,b,c) = (" + name(lat, a) + ", " + name(lat, ups[i]) + ", " +
                      name(lat, ups[j]) + ") has no common upper cover"};
        }
      }
    }
  }
  return {"semimodular", true, "every pair of covers of a common element is covered"};
}

CheckResult check_atomistic(const Lattice& lat) {
  if (lat.bottom() == kNoElement) return {"atomistic", false, "no bottom"};
  for (ElementId x = 0; x < lat.size(); ++x) {
    ElementId acc = lat.bottom();
    for (ElementId a : lat.atoms()) {
      if (!lat.leq(a, x)) continue;
      const auto j = lat.try_join(acc, a);
      if (!j) return {"atomistic", false, "atoms below " + name(lat, x) + " have no join"};
      acc = *j;
    }
    if (acc != x) {
      return {"atomistic", false,
              name(lat, x) + " is not the join of its atoms (got " + name(lat, acc) + ")"};
    }
  }
  return {"atomistic", true, "every element is a join of atoms"};
}

CheckResult check_submodular_rank(const Lattice& lat) {
  for (ElementId x = 0; x < lat.size(); ++x) {
    for (ElementId y = x + 1; y < lat.size(); ++y) {
      const auto m = lat.try_meet(x, y);
      const auto j = lat.try_join(x, y);
      if (!m || !j) {
        return {"rank-submodular", false,
                "missing meet or join for " + name(lat, x) + ", " + name(lat, y)};
      }
      if (lat.rank_of(*j) + lat.rank_of(*m) > lat.rank_of(x) + lat.rank_of(y)) {
        return {"rank-submodular", false,
                "r(x v y) + r(x ^ y) > r(x) + r(y) at (" + name(lat, x) + ", " +
                    name(lat, y) + ")"};
      }
    }
  }
  return {"rank-submodular", true, "r(x v y) + r(x ^ y) <= r(x) + r(y) for all pairs"};
}

}  // namespace

VerificationReport verify_geometric(const Lattice& lat) {
  VerificationReport report;
  report.checks.push_back(check_bounded(lat));
  report.checks.push_back(check_graded(lat));
  report.checks.push_back(check_lattice_ops(lat));
  report.checks.push_back(check_semimodular(lat));
  report.checks.push_back(check_atomistic(lat));
  report.checks.push_back(check_submodular_rank(lat));
  return report;
}

ShadowSets shadows(const Lattice& lat, ElementId x) {
  ShadowSets s;
  for (ElementId a : lat.atoms()) {
    if (lat.leq(a, x)) s.under.push_back(a);
  }
  for (ElementId h : lat.hyperplanes()) {
    if (lat.leq(x, h)) s.over.push_back(h);
  }
  return s;
}

ShadowInequalityReport check_shadow_inequality(const Lattice& lat) {
  ShadowInequalityReport report;
  std::vector<int> over_size;
  for (ElementId p : lat.atoms()) {
    over_size.push_back(static_cast<int>(shadows(lat, p).over.size()));
  }
  std::vector<int> under_size;
  for (ElementId h : lat.hyperplanes()) {
    under_size.push_back(static_cast<int>(shadows(lat, h).under.size()));
  }
  bool first = true;
  for (std::size_t i = 0; i < lat.atoms().size(); ++i) {
    for (std::size_t j = 0; j < lat.hyperplanes().size(); ++j) {
      const ElementId p = lat.atoms()[i];
      const ElementId h = lat.hyperplanes()[j];
      if (lat.leq(p, h)) continue;
      ++report.pairs_checked;
      const int slack = over_size[i] - under_size[j];
      if (first || slack < report.min_slack) report.min_slack = slack;
      first = false;
      if (slack < 0 && !report.violation) report.violation = {p, h};
    }
  }
  return report;
}

CheckResult check_cover_partition(const Lattice& lat, ElementId x) {
  std::unordered_map<ElementId, int> hits;
  for (ElementId k : lat.covers_up(x)) {
    for (ElementId a : lat.atoms()) {
      if (lat.leq(a, k) && !lat.leq(a, x)) ++hits[a];
    }
  }
  for (ElementId a : lat.atoms()) {
    const int expected = lat.leq(a, x) ? 0 : 1;
    const auto it = hits.find(a);
    const int got = it == hits.end() ? 0 : it->second;
    if (got != expected) {
      return {"cover-partition", false,
              "atom " + name(lat, a) + " lies in " + std::to_string(got) +
                  " blocks over " + name(lat, x)};
    }
  }
  return {"cover-partition", true,
          "covers of " + name(lat, x) + " partition the atoms outside it"};
}

CheckResult check_lower_cover_upsets(const Lattice& lat) {
  for (ElementId h = 0; h < lat.size(); ++h) {
    const auto& downs = lat.covers_down(h);
    for (std::size_t i = 0; i < downs.size(); ++i) {
      for (std::size_t j = i + 1; j < downs.size(); ++j) {
        for (ElementId z = 0; z < lat.size(); ++z) {
          const bool common = lat.leq(downs[i], z) && lat.leq(downs[j], z);
          if (common != lat.leq(h, z)) {
            return {"lower-cover-upsets", false,
                    "lower covers " + name(lat, downs[i]) + ", " + name(lat, downs[j]) +
                        " of " + name(lat, h) + " disagree at " + name(lat, z)};
          }
        }
      }
    }
  }
  return {"lower-cover-upsets", true,
          "distinct lower covers of h share exactly the up-set of h"};
}

CheckResult check_no_crown(const Lattice& lat) {
  // (v, v') -> first common lower cover seen.
  std::unordered_map<long long, ElementId> seen;
  const long long n = lat.size();
  for (ElementId u = 0; u < lat.size(); ++u) {
    const auto& ups = lat.covers_up(u);
    for (std::size_t i = 0; i < ups.size(); ++i) {
      for (std::size_t j = i + 1; j < ups.size(); ++j) {
        const long long key = ups[i] * n + ups[j];
        const auto [it, inserted] = seen.emplace(key, u);
        if (!inserted) {
          return {"no-crown", false,
                  "4-crown " + name(lat, it->second) + ", " + name(lat, u) + " < " +
                      name(lat, ups[i]) + ", " + name(lat, ups[j])};
        }
      }
    }
  }
  return {"no-crown", true, "no two elements share two upper covers"};
}

}  // namespace flatmatch
