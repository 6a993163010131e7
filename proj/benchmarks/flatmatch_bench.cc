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
#include <vector>

#include <benchmark/benchmark.h>

#include "flatmatch/corpus.hpp"
#include "flatmatch/lattice.hpp"
#include "flatmatch/matching.hpp"
#include "flatmatch/society.hpp"

namespace flatmatch {
namespace {

// Complete graphs K_n: the flat count is the Bell number of n.
void BM_EnumerateFlatsGraphic(benchmark::State& state) {
  const MatroidSpec spec = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_flats(spec));
  state.SetLabel("K" + std::to_string(state.range(0)));
}
BENCHMARK(BM_EnumerateFlatsGraphic)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_BuildLatticeProjectivePlane(benchmark::State& state) {
  const MatroidSpec spec = projective_plane(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_lattice(spec));
}
BENCHMARK(BM_BuildLatticeProjectivePlane)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_VerifyGeometric(benchmark::State& state) {
  const Lattice lat = build_lattice(complete_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(verify_geometric(lat));
}
BENCHMARK(BM_VerifyGeometric)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_MatchDispatch(benchmark::State& state) {
  const Lattice lat = build_lattice(complete_graph(5));
  const auto strategy = static_cast<Strategy>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(match_dispatch(lat, strategy));
  state.SetLabel(std::string(strategy_name(strategy)));
}
BENCHMARK(BM_MatchDispatch)
    ->Arg(static_cast<int>(Strategy::kHall))
    ->Arg(static_cast<int>(Strategy::kMilnerShelah))
    ->Arg(static_cast<int>(Strategy::kBjorner))
    ->Arg(static_cast<int>(Strategy::kAuto))
    ->Unit(benchmark::kMicrosecond);

void BM_ExtractObstruction(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<Society> pool;
  for (int i = 0; i < 256; ++i) pool.push_back(random_society(rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_obstruction(pool[i++ % pool.size()]));
  }
}
BENCHMARK(BM_ExtractObstruction);

}  // namespace
}  // namespace flatmatch

BENCHMARK_MAIN();
