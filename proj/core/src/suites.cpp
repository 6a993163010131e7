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

#include <random>
#include <string>
#include <vector>

#include "flatmatch/corpus.hpp"
#include "flatmatch/errors.hpp"
#include "flatmatch/matching.hpp"
#include "flatmatch/suites.hpp"

namespace flatmatch {
namespace {

std::string triple(const Lattice& lat, ElementId a, ElementId x, ElementId b) {
  return "(a, x, b) = (" + lat.set_of(a).to_string() + ", " + lat.set_of(x).to_string() +
         ", " + lat.set_of(b).to_string() + ")";
}

// Empty string on success.
std::string try_complement(const Lattice& lat, ElementId a, ElementId x, ElementId b) {
  try {
    modular_complement(lat, a, b, x);
    return "";
  } catch (const InvariantError& e) {
    return triple(lat, a, x, b) + ": " + e.what();
  }
}

}  // namespace

bool exhaustive_mode(const Lattice& lat, const SuiteOptions& opts) {
  return lat.size() <= opts.exhaustive_cap;
}

CheckResult modular_complement_suite(const Lattice& lat, const SuiteOptions& opts) {
  std::size_t count = 0;
  if (exhaustive_mode(lat, opts)) {
    for (ElementId x = 0; x < lat.size(); ++x) {
      for (ElementId a = 0; a <= x; ++a) {
        if (!lat.leq(a, x)) continue;
        for (ElementId b = x; b < lat.size(); ++b) {
          if (!lat.leq(x, b)) continue;
          ++count;
          if (auto failure = try_complement(lat, a, x, b); !failure.empty()) {
            return {"modular-complement", false, failure};
          }
        }
      }
    }
    return {"modular-complement", true,
            "exhaustive: " + std::to_string(count) + " triples"};
  }

  std::mt19937_64 rng(opts.seed);
  for (int i = 0; i < opts.sampled_triples; ++i) {
    const ElementId x = draw(rng, 0, lat.size() - 1);
    std::vector<ElementId> below;
    std::vector<ElementId> above;
    for (ElementId z = 0; z < lat.size(); ++z) {
      if (lat.leq(z, x)) below.push_back(z);
      if (lat.leq(x, z)) above.push_back(z);
    }
    const ElementId a = below[static_cast<std::size_t>(
        draw(rng, 0, static_cast<int>(below.size()) - 1))];
    const ElementId b = above[static_cast<std::size_t>(
        draw(rng, 0, static_cast<int>(above.size()) - 1))];
    ++count;
    if (auto failure = try_complement(lat, a, x, b); !failure.empty()) {
      return {"modular-complement", false, failure};
    }
  }
  return {"modular-complement", true, "sampled: " + std::to_string(count) + " triples"};
}

CheckResult atom_sublattice_suite(const Lattice& lat, const SuiteOptions& opts) {
  std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
  const auto& atoms = lat.atoms();
  for (int i = 0; i <= opts.atom_subsets; ++i) {
    std::vector<ElementId> chosen;
    if (i == opts.atom_subsets) {
      chosen = atoms;
    } else {
      const int percent = draw(rng, 0, 100);
      for (ElementId a : atoms) {
        if (draw(rng, 1, 100) <= percent) chosen.push_back(a);
      }
    }
    try {
      atom_sublattice(lat, chosen);
    } catch (const InvariantError& e) {
      std::string b;
      for (ElementId a : chosen) b += lat.set_of(a).to_string();
      return {"atom-sublattice", false, "B = " + b + ": " + e.what()};
    }
  }
  return {"atom-sublattice", true,
          std::to_string(opts.atom_subsets + 1) + " atom sets checked"};
}

VerificationReport full_verification(const Lattice& lat, const SuiteOptions& opts) {
  VerificationReport report = verify_geometric(lat);
  if (!report.passed()) return report;

  const ShadowInequalityReport six = check_shadow_inequality(lat);
  std::string detail = std::to_string(six.pairs_checked) + " pairs, min slack " +
                       std::to_string(six.min_slack);
  if (six.violation) {
    detail = "|under(h)| > |over(p)| at p = " + lat.set_of(six.violation->first).to_string() +
             ", h = " + lat.set_of(six.violation->second).to_string();
  }
  report.add("shadow-inequality", six.passed(), detail);

  CheckResult partition{"cover-partition", true, "all elements"};
  for (ElementId x = 0; x < lat.size() && partition.passed; ++x) {
    if (auto c = check_cover_partition(lat, x); !c.passed) partition = c;
  }
  report.checks.push_back(partition);
  report.checks.push_back(check_lower_cover_upsets(lat));
  report.checks.push_back(check_no_crown(lat));

  if (lat.rank() >= 3) {
    CheckResult claim{"case2-claim", true,
                      std::to_string(lat.hyperplanes().size()) + " hyperplanes"};
    for (ElementId h : lat.hyperplanes()) {
      const VerificationReport r = check_case2_claim(lat, h);
      if (!r.passed()) {
        claim = {"case2-claim", false,
                 "h0 = " + lat.set_of(h).to_string() + ": " + r.failures()};
        break;
      }
    }
    report.checks.push_back(claim);
  } else {
    report.add("case2-claim", true, "not applicable below rank 3");
  }

  report.checks.push_back(modular_complement_suite(lat, opts));
  report.checks.push_back(atom_sublattice_suite(lat, opts));
  return report;
}

}  // namespace flatmatch
