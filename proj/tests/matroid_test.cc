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
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "flatmatch/corpus.hpp"
#include "flatmatch/errors.hpp"
#include "flatmatch/matroid.hpp"
#include "oracles.hpp"

namespace flatmatch {
namespace {

// Edge order 12, 13, 14, 23, 24, 34 on vertices 1..4, stored 0-based.
MatroidSpec K4() {
  return MatroidSpec::graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}
constexpr int kEdge12 = 0;
constexpr int kEdge34 = 5;

// Rank function from the oracle for whichever kind `spec` holds.
std::function<int(oracle::Mask)> OracleRank(const MatroidSpec& spec) {
  if (const auto* u = std::get_if<UniformKind>(&spec.kind())) {
    const int k = u->k;
    return [k](oracle::Mask s) { return std::min(oracle::popcount(s), k); };
  }
  if (const auto* g = std::get_if<GraphicKind>(&spec.kind())) {
    return [g](oracle::Mask s) { return oracle::graphic_rank(g->vertices, g->edges, s); };
  }
  const auto* l = std::get_if<LinearKind>(&spec.kind());
  return [l](oracle::Mask s) { return oracle::linear_rank(l->prime, l->columns, s); };
}

TEST(ParseMatroidTest, UniformFieldsMapDirectly) {
  const MatroidSpec spec = parse_matroid(R"({"kind":"uniform","n":4,"k":3})");
  EXPECT_EQ(spec.kind_name(), "uniform");
  EXPECT_EQ(spec.ground_size(), 4);
  EXPECT_EQ(std::get<UniformKind>(spec.kind()).k, 3);
}

TEST(ParseMatroidTest, GraphicK4) {
  const MatroidSpec spec = parse_matroid(
      R"({"kind":"graphic","n":6,"vertices":4,
          "edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]})");
  EXPECT_EQ(spec.kind_name(), "graphic");
  const auto& g = std::get<GraphicKind>(spec.kind());
  EXPECT_EQ(g.vertices, 4);
  EXPECT_EQ(g.edges.size(), 6u);
}

TEST(ParseMatroidTest, LinearAndFlatsKinds) {
  const MatroidSpec lin = parse_matroid(
      R"({"kind":"linear","n":3,"p":2,"columns":[[1,0,0],[0,1,0],[1,1,0]]})");
  EXPECT_EQ(lin.kind_name(), "linear");
  const MatroidSpec flats = parse_matroid(
      R"({"kind":"flats","n":2,"flats":[[],[0],[1],[0,1]]})");
  EXPECT_EQ(flats.kind_name(), "flats");
  EXPECT_EQ(flats.rank(), 2);
}

TEST(ParseMatroidTest, FlatsMissingGroundIsRejected) {
  try {
    parse_matroid(R"({"kind":"flats","n":2,"flats":[[],[0],[1]]})");
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.axiom(), "ground-is-flat");
  }
}

TEST(ParseMatroidTest, FlatsNotClosedUnderIntersection) {
  try {
    MatroidSpec::explicit_flats(
        3, {Subset{}, Subset{0, 1}, Subset{1, 2}, Subset{0, 1, 2}});
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.axiom(), "intersection-closed");
  }
}

TEST(ParseMatroidTest, FlatsWithUncoveredElementsRejected) {
  // {0} and {1} are covers of the empty flat inside {0,1,2}; element 2 is in
  // no cover at all, so the covers do not partition the ground set.
  EXPECT_THROW(MatroidSpec::explicit_flats(3, {Subset{}, Subset{0}, Subset{1},
                                                Subset{0, 1, 2}}),
               ValidationError);
}

TEST(ParseMatroidTest, SyntaxErrorReportsLine) {
  try {
    parse_matroid("{\n\"kind\": \"uniform\",\n\"n\": 4,\n\"k\" 3}");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  }
}

TEST(ParseMatroidTest, MissingFieldIsNamed) {
  try {
    parse_matroid(R"({"kind":"uniform","n":4})");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.field(), "k");
  }
}

TEST(ParseMatroidTest, BadValuesAreRejected) {
  EXPECT_THROW(parse_matroid(R"({"kind":"nope","n":1})"), ParseError);
  EXPECT_THROW(parse_matroid(R"({"kind":"uniform","n":3,"k":4})"), ValidationError);
  EXPECT_THROW(parse_matroid(R"({"kind":"linear","n":1,"p":4,"columns":[[1]]})"),
               ValidationError);
  EXPECT_THROW(parse_matroid(R"({"kind":"graphic","n":2,"vertices":2,"edges":[[0,1]]})"),
               ParseError);
  EXPECT_THROW(parse_matroid(R"({"kind":"graphic","n":1,"vertices":2,"edges":[[0,5]]})"),
               ValidationError);
  EXPECT_THROW(parse_matroid("[1,2]"), ParseError);
}

TEST(ParseMatroidTest, RoundTripThroughJson) {
  for (const auto& entry : standard_corpus(kDefaultCorpusSeed, 5)) {
    const MatroidSpec back = parse_matroid(matroid_to_json(entry.spec));
    EXPECT_EQ(matroid_to_json(back), matroid_to_json(entry.spec)) << entry.name;
    EXPECT_EQ(enumerate_flats(back), enumerate_flats(entry.spec)) << entry.name;
  }
}

TEST(RankTest, SpecExamples) {
  EXPECT_EQ(MatroidSpec::uniform(3, 4).rank(Subset{0, 1}), 2);
  EXPECT_EQ(K4().rank(Subset::full(6)), 3);
  const MatroidSpec lin = MatroidSpec::linear(2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
  EXPECT_EQ(lin.rank(lin.ground()), 2);
  EXPECT_EQ(oracle::linear_rank(2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}, 0b111), 2);
}

TEST(RankTest, GfRankOverLargerPrimes) {
  EXPECT_EQ(gf_rank(3, {{1, 1}, {2, 2}}), 1);
  EXPECT_EQ(gf_rank(5, {{1, 2}, {2, 4}, {0, 1}}), 2);
  EXPECT_EQ(gf_rank(7, {}), 0);
  EXPECT_TRUE(is_prime(13));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(9));
}

TEST(ClosureTest, SpecExamples) {
  EXPECT_EQ(MatroidSpec::uniform(3, 4).closure(Subset{0}), Subset{0});
  const Subset pair{kEdge12, kEdge34};
  EXPECT_EQ(K4().closure(pair), pair);
}

TEST(ClosureTest, FanoLineThroughTwoPoints) {
  const MatroidSpec fano = projective_plane(2);
  const auto& cols = std::get<LinearKind>(fano.kind()).columns;
  for (int a = 0; a < 7; ++a) {
    for (int b = a + 1; b < 7; ++b) {
      const auto span = oracle::span(2, cols, (1ull << a) | (1ull << b));
      Subset expected;
      for (int e = 0; e < 7; ++e) {
        if (span.count(cols[e])) expected.insert(e);
      }
      const Subset line = fano.closure(Subset{a, b});
      EXPECT_EQ(line, expected);
      EXPECT_EQ(line.size(), 3);
    }
  }
}

TEST(EnumerateFlatsTest, SpecCounts) {
  EXPECT_EQ(enumerate_flats(MatroidSpec::uniform(3, 4)).size(), 12u);
  EXPECT_EQ(enumerate_flats(K4()).size(), 15u);
  EXPECT_EQ(enumerate_flats(MatroidSpec::uniform(2, 3)).size(), 5u);
  EXPECT_EQ(static_cast<std::int64_t>(enumerate_flats(complete_graph(5)).size()),
            oracle::bell(5));
}

TEST(EnumerateFlatsTest, SortedByRankThenLex) {
  const MatroidSpec spec = MatroidSpec::uniform(3, 4);
  const auto flats = enumerate_flats(spec);
  ASSERT_EQ(flats.front(), Subset{});
  ASSERT_EQ(flats.back(), spec.ground());
  for (std::size_t i = 1; i < flats.size(); ++i) {
    const auto a = std::make_pair(spec.rank(flats[i - 1]), flats[i - 1]);
    const auto b = std::make_pair(spec.rank(flats[i]), flats[i]);
    EXPECT_TRUE(RankLexLess{}(a, b)) << i;
  }
  EXPECT_EQ(flats[1], Subset{0});
  EXPECT_EQ(flats[5], (Subset{0, 1}));
  EXPECT_EQ(flats[6], (Subset{0, 2}));
}

TEST(EnumerateFlatsTest, CapExceededReportsPartialCount) {
  try {
    enumerate_flats(MatroidSpec::uniform(3, 6), 5);
    FAIL() << "expected cap to be exceeded";
  } catch (const CapExceeded& e) {
    EXPECT_GT(e.partial_count(), 5u);
  }
}

TEST(EnumerateFlatsTest, BreadthFirstPathAboveTwentyElements) {
  // 21 elements forces the cover-based generator.
  const MatroidSpec spec = MatroidSpec::uniform(2, 21);
  const auto flats = enumerate_flats(spec);
  EXPECT_EQ(flats.size(), 23u);
  const MatroidSpec big = complete_graph(7);  // 21 edges
  EXPECT_EQ(static_cast<std::int64_t>(enumerate_flats(big).size()), oracle::bell(7));
}

TEST(EnumerateFlatsTest, MatchesOracleOnCorpus) {
  for (const auto& entry : standard_corpus()) {
    const MatroidSpec& spec = entry.spec;
    if (spec.ground_size() > 10) continue;
    if (const auto* l = std::get_if<LinearKind>(&spec.kind()); l && l->prime != 2) continue;
    const auto expected = oracle::flats(spec.ground_size(), OracleRank(spec));
    std::set<oracle::Mask> got;
    for (Subset f : enumerate_flats(spec)) got.insert(f.bits());
    EXPECT_EQ(got, expected) << entry.name;
  }
}

TEST(EnumerateFlatsTest, ClosedUnderIntersection) {
  for (const auto& entry : standard_corpus()) {
    const auto flats = enumerate_flats(entry.spec);
    const std::set<std::uint64_t> index = [&] {
      std::set<std::uint64_t> s;
      for (Subset f : flats) s.insert(f.bits());
      return s;
    }();
    for (Subset a : flats) {
      for (Subset b : flats) {
        ASSERT_TRUE(index.count((a & b).bits())) << entry.name;
      }
    }
  }
}

// Exhaustive rank axioms over all subset pairs for grounds of size <= 10.
TEST(RankAxiomsTest, HoldOnCorpus) {
  for (const auto& entry : standard_corpus()) {
    const MatroidSpec& spec = entry.spec;
    const int n = spec.ground_size();
    if (n > 10) continue;
    const std::size_t count = std::size_t{1} << n;
    std::vector<int> r(count);
    for (std::size_t s = 0; s < count; ++s) r[s] = spec.rank(Subset(s));
    ASSERT_EQ(r[0], 0) << entry.name;
    for (std::size_t s = 0; s < count; ++s) {
      for (int e = 0; e < n; ++e) {
        const std::size_t t = s | (std::size_t{1} << e);
        const int gain = r[t] - r[s];
        ASSERT_TRUE(gain == 0 || gain == 1) << entry.name;
      }
      const Subset cl = spec.closure(Subset(s));
      ASSERT_TRUE(Subset(s).is_subset_of(cl)) << entry.name;
      ASSERT_EQ(spec.closure(cl), cl) << entry.name;
      ASSERT_EQ(r[cl.bits()], r[s]) << entry.name;
    }
    for (std::size_t s = 0; s < count; ++s) {
      for (std::size_t t = 0; t < count; ++t) {
        ASSERT_LE(r[s | t] + r[s & t], r[s] + r[t]) << entry.name;
        if ((s & t) == s) {
          ASSERT_LE(r[s], r[t]) << entry.name;
          ASSERT_TRUE(spec.closure(Subset(s)).is_subset_of(spec.closure(Subset(t))));
        }
      }
    }
  }
}

TEST(ExplicitFlatsTest, RankIsChainLength) {
  // Boolean lattice on three elements given by its flats.
  std::vector<Subset> flats;
  for (std::uint64_t s = 0; s < 8; ++s) flats.push_back(Subset(s));
  const MatroidSpec spec = MatroidSpec::explicit_flats(3, flats);
  EXPECT_EQ(spec.rank(), 3);
  EXPECT_EQ(spec.rank(Subset{0, 2}), 2);
  EXPECT_EQ(spec.closure(Subset{1}), Subset{1});
  EXPECT_EQ(enumerate_flats(spec).size(), 8u);
}

}  // namespace
}  // namespace flatmatch
