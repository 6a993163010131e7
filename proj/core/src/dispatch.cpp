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
#include <utility>
#include <vector>

#include "flatmatch/errors.hpp"
#include "flatmatch/matching.hpp"

namespace flatmatch {
namespace {

std::string name(const Lattice& lat, ElementId x) { return lat.set_of(x).to_string(); }

class BjornerRun {
 public:
  BjornerRun(StrategyReport& report, int max_depth)
      : report_(report), max_depth_(max_depth) {}

  // Returns the matching and the name of the branch that produced it.
  std::pair<Matching, std::string> run(const Lattice& lat, int depth) {
    const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
    if (lat.rank() == 2) {
      log(pad + "rank 2: identity");
      return {identity_matching(lat), "identity"};
    }
    if (depth >= max_depth_) {
      fallback(pad + "depth cap " + std::to_string(max_depth_) + " reached: hall");
      return {match_hall(lat), "hall"};
    }

    const SubMatcher recurse = [this, depth](const Lattice& sub) {
      return run(sub, depth + 1).first;
    };

    // Pivot on atoms under few hyperplanes first.
    std::vector<std::pair<std::size_t, ElementId>> pivots;
    for (ElementId q : lat.atoms()) pivots.emplace_back(shadows(lat, q).over.size(), q);
    std::sort(pivots.begin(), pivots.end());

    for (const auto& [over_size, q] : pivots) {
      for (ElementId l0 : lat.covers_up(q)) {
        const CaseOutcome one = match_bjorner_case1(lat, q, l0, recurse);
        if (one.matching) {
          log(pad + "rank " + std::to_string(lat.rank()) + " case 1: " + one.note);
          return {*one.matching, "bjorner-case1"};
        }
        log(pad + "case 1 at q = " + name(lat, q) + ", l0 = " + name(lat, l0) + ": " +
            one.note);
        const auto& ups = lat.covers_up(q);
        const auto l1 = std::find_if(ups.begin(), ups.end(), [&](ElementId c) {
          return c != l0 && shadows(lat, c).under.size() >= 3;
        });
        if (l1 == ups.end()) continue;
        const CaseOutcome two = match_bjorner_case2(lat, q, l0, *l1, recurse);
        if (two.matching) {
          log(pad + "rank " + std::to_string(lat.rank()) + " case 2: " + two.note);
          return {*two.matching, "bjorner-case2"};
        }
        log(pad + "case 2 at q = " + name(lat, q) + ", l0 = " + name(lat, l0) +
            ", l1 = " + name(lat, *l1) + ": " + two.note);
      }
    }
    fallback(pad + "rank " + std::to_string(lat.rank()) +
             ": no pivot completed case 1 or case 2: hall");
    return {match_hall(lat), "hall"};
  }

 private:
  void log(std::string line) { report_.trace.push_back(std::move(line)); }
  void fallback(std::string line) {
    report_.fallbacks.push_back(line);
    report_.trace.push_back(std::move(line));
  }

  StrategyReport& report_;
  int max_depth_;
};

Matching from_espousal(const Espousal& e) {
  return Matching(e.pairs.begin(), e.pairs.end());
}

}  // namespace

std::optional<Strategy> parse_strategy(std::string_view name) {
  if (name == "hall") return Strategy::kHall;
  if (name == "milner-shelah") return Strategy::kMilnerShelah;
  if (name == "bjorner") return Strategy::kBjorner;
  if (name == "auto") return Strategy::kAuto;
  return std::nullopt;
}

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::kHall:
      return "hall";
    case Strategy::kMilnerShelah:
      return "milner-shelah";
    case Strategy::kBjorner:
      return "bjorner";
    case Strategy::kAuto:
      return "auto";
  }
  return "auto";
}

DispatchResult match_dispatch(const Lattice& lat, Strategy strategy) {
  if (lat.rank() < 2) throw PreconditionError("matchings need rank >= 2");
  DispatchResult out;
  StrategyReport& report = out.report;
  report.requested = strategy;
  report.preconditions.push_back("rank " + std::to_string(lat.rank()) + " >= 2");

  if (lat.rank() == 2) {
    report.preconditions.push_back("rank 2: atoms are the hyperplanes");
    report.used = "identity";
    out.matching = identity_matching(lat);
  } else {
    std::optional<DegreeCheck> degrees;
    if (strategy == Strategy::kMilnerShelah || strategy == Strategy::kAuto) {
      degrees = check_milner_shelah(lattice_society(lat));
      report.preconditions.push_back(
          std::string("degree condition: ") + (degrees->ok ? "holds" : "fails, ") +
          (degrees->ok ? "" : degrees->detail));
    }
    switch (strategy) {
      case Strategy::kHall:
        report.used = "hall";
        out.matching = match_hall(lat);
        break;
      case Strategy::kMilnerShelah:
        if (degrees->ok) {
          report.used = "milner-shelah";
          out.matching = from_espousal(match_milner_shelah(lattice_society(lat)));
        } else {
          report.fallbacks.push_back("degree condition fails: hall");
          report.used = "hall";
          out.matching = match_hall(lat);
        }
        break;
      case Strategy::kAuto:
        if (degrees->ok) {
          report.used = "milner-shelah";
          out.matching = from_espousal(match_milner_shelah(lattice_society(lat)));
          break;
        }
        [[fallthrough]];
      case Strategy::kBjorner: {
        BjornerRun run(report, lat.rank());
        auto [matching, branch] = run.run(lat, 0);
        report.used = std::move(branch);
        out.matching = std::move(matching);
        break;
      }
    }
  }

  const MatchingVerdict verdict = verify_matching(lat, out.matching);
  report.verified = verdict.ok;
  report.violation = verdict.violation;
  if (!verdict.ok) {
    throw InvariantError("dispatcher produced an invalid matching: " + verdict.violation);
  }
  return out;
}

}  // namespace flatmatch
