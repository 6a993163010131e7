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


#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "flatmatch/corpus.hpp"

namespace flatmatch::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("flatmatch_cli_" + std::string(
                ::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string WriteSpec(const std::string& name, const MatroidSpec& spec) {
    return Write(name, matroid_to_json(spec));
  }

  int Run(const std::vector<std::string>& args) {
    out_.str("");
    err_.str("");
    return run(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, BuildSummaries) {
  const std::string fano = WriteSpec("fano.json", projective_plane(2));
  ASSERT_EQ(Run({"build", "--input", fano}), kSuccess) << err_.str();
  EXPECT_EQ(out_.str(), "N=16 r=3 atoms=7 hyperplanes=7\n");

  const std::string u34 = WriteSpec("u34.json", MatroidSpec::uniform(3, 4));
  ASSERT_EQ(Run({"build", "--input", u34}), kSuccess);
  EXPECT_EQ(out_.str(), "N=12 r=3 atoms=4 hyperplanes=6\n");

  const std::string k4 = WriteSpec("k4.json", complete_graph(4));
  ASSERT_EQ(Run({"build", "--input", k4}), kSuccess);
  EXPECT_EQ(out_.str(), "N=15 r=3 atoms=6 hyperplanes=7\n");
}

TEST_F(CliTest, BuildWritesLatticeJson) {
  const std::string u34 = WriteSpec("u34.json", MatroidSpec::uniform(3, 4));
  const std::string out = (dir_ / "lat.json").string();
  ASSERT_EQ(Run({"build", "--input", u34, "--out", out}), kSuccess);
  std::ifstream in(out);
  const auto doc = nlohmann::json::parse(in);
  EXPECT_EQ(doc["size"], 12);
  EXPECT_EQ(doc["elements"].size(), 12u);
}

TEST_F(CliTest, VerifyFanoPasses) {
  const std::string fano = WriteSpec("fano.json", projective_plane(2));
  ASSERT_EQ(Run({"verify", "--input", fano}), kSuccess) << out_.str();
  const auto doc = nlohmann::json::parse(out_.str());
  EXPECT_TRUE(doc["all_passed"].get<bool>());
  EXPECT_EQ(doc["mode"], "exhaustive");
  for (const auto& c : doc["checks"]) EXPECT_TRUE(c["passed"].get<bool>()) << c["name"];
}

TEST_F(CliTest, CorruptedFlatsAreRejected) {
  // The flats of U(3,4) with the line {0,1} removed.
  const std::string text =
      R"({"kind":"flats","n":4,"flats":[[],[0],[1],[2],[3],[0,2],[0,3],[1,2],[1,3],[2,3],[0,1,2,3]]})";
  const std::string path = Write("broken.json", text);
  EXPECT_EQ(Run({"verify", "--input", path}), kInputError);
  EXPECT_NE(err_.str().find("validation error"), std::string::npos) << err_.str();
}

TEST_F(CliTest, ExhaustiveCapZeroSwitchesToSampling) {
  const std::string u34 = WriteSpec("u34.json", MatroidSpec::uniform(3, 4));
  ASSERT_EQ(Run({"verify", "--input", u34, "--exhaustive-cap", "0"}), kSuccess);
  const auto doc = nlohmann::json::parse(out_.str());
  EXPECT_EQ(doc["mode"], "sampled");
  EXPECT_EQ(doc["exhaustive_cap"], 0);
}

TEST_F(CliTest, MatchFanoWithBjorner) {
  const std::string fano = WriteSpec("fano.json", projective_plane(2));
  ASSERT_EQ(Run({"match", "--input", fano, "--strategy", "bjorner"}), kSuccess);
  const auto doc = nlohmann::json::parse(out_.str());
  EXPECT_TRUE(doc["verified"].get<bool>());
  EXPECT_EQ(doc["strategy"], "bjorner");
  EXPECT_EQ(doc["matching"].size(), 7u);
}

TEST_F(CliTest, ObstructTwoVsOne) {
  const std::string path =
      Write("society-2v1.json", R"({"kind":"society","M":2,"W":1,"edges":[[0,0],[1,0]]})");
  ASSERT_EQ(Run({"obstruct", "--input", path}), kSuccess);
  const auto doc = nlohmann::json::parse(out_.str());
  EXPECT_EQ(doc["deficiency"], 1);
  EXPECT_EQ(doc["witness"]["kappa"], 1);
  EXPECT_EQ(doc["witness"]["A"], nlohmann::json::array({0}));
  EXPECT_TRUE(doc["witness"]["verdict"]["ok"].get<bool>());
}

TEST_F(CliTest, ObstructOnLatticeHasNoWitness) {
  const std::string fano = WriteSpec("fano.json", projective_plane(2));
  ASSERT_EQ(Run({"obstruct", "--input", fano}), kSuccess);
  const auto doc = nlohmann::json::parse(out_.str());
  EXPECT_TRUE(doc["witness"].is_null());
  EXPECT_TRUE(doc["total"].get<bool>());
}

TEST_F(CliTest, ExportDotIsRankLayered) {
  const std::string u23 = WriteSpec("u23.json", MatroidSpec::uniform(2, 3));
  ASSERT_EQ(Run({"export-dot", "--input", u23}), kSuccess);
  const std::string dot = out_.str();
  int labels = 0;
  for (std::size_t pos = 0; (pos = dot.find("[label=", pos)) != std::string::npos; ++pos) {
    ++labels;
  }
  EXPECT_EQ(labels, 5);
  int rows = 0;
  for (std::size_t pos = 0; (pos = dot.find("rank=same", pos)) != std::string::npos; ++pos) {
    ++rows;
  }
  EXPECT_EQ(rows, 3);
}

TEST_F(CliTest, GenCorpusWritesEveryInstance) {
  const std::string out = (dir_ / "corpus").string();
  ASSERT_EQ(Run({"gen-corpus", "--out", out}), kSuccess);
  int files = 0;
  for (const auto& e : fs::directory_iterator(out)) files += e.is_regular_file() ? 1 : 0;
  // 15 uniform pairs, K4, K5, two planes, 50 random matroids, one society.
  EXPECT_EQ(files, 15 + 2 + 2 + 50 + 1);
  EXPECT_TRUE(fs::exists(fs::path(out) / "pg_2_3.json"));
  EXPECT_TRUE(fs::exists(fs::path(out) / "society_2v1.json"));
  EXPECT_EQ(Run({"gen-corpus"}), kInputError);
}

TEST_F(CliTest, InputErrorsExitWithTwo) {
  EXPECT_EQ(Run({"build", "--input", (dir_ / "missing.json").string()}), kInputError);
  EXPECT_EQ(Run({"build", "--input", Write("bad.json", "{\"kind\":")}), kInputError);
  EXPECT_NE(err_.str().find("parse error"), std::string::npos);
  EXPECT_EQ(Run({"build", "--input", Write("nok.json", R"({"kind":"uniform","n":3})")}),
            kInputError);
  EXPECT_NE(err_.str().find("[field k]"), std::string::npos) << err_.str();
  const std::string u34 = WriteSpec("u34.json", MatroidSpec::uniform(3, 4));
  EXPECT_EQ(Run({"match", "--input", u34, "--strategy", "greedy"}), kInputError);
  EXPECT_EQ(Run({"build", "--input", u34, "--flat-cap", "3"}), kInputError);
  const std::string rank1 = WriteSpec("u13.json", MatroidSpec::uniform(1, 3));
  EXPECT_EQ(Run({"match", "--input", rank1}), kInputError);
  EXPECT_EQ(Run({"frobnicate"}), kInputError);
  EXPECT_EQ(Run({}), kInputError);
}

TEST_F(CliTest, HelpSucceeds) { EXPECT_EQ(Run({"--help"}), kSuccess); }

TEST_F(CliTest, SameSeedSameBytes) {
  const std::string k5 = WriteSpec("k5.json", complete_graph(5));
  ASSERT_EQ(Run({"match", "--input", k5, "--strategy", "bjorner"}), kSuccess);
  const std::string first = out_.str();
  ASSERT_EQ(Run({"match", "--input", k5, "--strategy", "bjorner"}), kSuccess);
  EXPECT_EQ(out_.str(), first);

  ASSERT_EQ(Run({"verify", "--input", k5, "--seed", "9", "--exhaustive-cap", "10"}),
            kSuccess);
  const std::string v1 = out_.str();
  ASSERT_EQ(Run({"verify", "--input", k5, "--seed", "9", "--exhaustive-cap", "10"}),
            kSuccess);
  EXPECT_EQ(out_.str(), v1);
}

}  // namespace
}  // namespace flatmatch::cli
