// Copyright 2026 The streamshare Authors.
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

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "streamshare/axioms.hpp"
#include "streamshare/games.hpp"
#include "streamshare/generator.hpp"
#include "streamshare/induced_games.hpp"
#include "streamshare/registry.hpp"

namespace {

using namespace streamshare;  // NOLINT(build/namespaces)

TUGame random_game(std::size_t n) {
  std::vector<std::string> players;
  for (std::size_t i = 0; i < n; ++i) players.push_back("p" + std::to_string(i));
  std::uint64_t state = 0x2545f4914f6cdd1dULL;
  return TUGame::from_function(players, [&](Coalition s) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return s == 0 ? Rational(0) : Rational(static_cast<long long>(state >> 59));
  });
}

void BM_ShapleyValue(benchmark::State& state) {
  const TUGame game = random_game(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(shapley_value(game));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ShapleyValue)->DenseRange(2, 14, 2);

void BM_BalancedContributions(benchmark::State& state) {
  const TUGame game = random_game(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(balanced_contributions_check(game));
}
BENCHMARK(BM_BalancedContributions)->DenseRange(2, 8, 2);

StreamingProblem sized_problem(std::size_t artists, std::size_t users) {
  ProblemGenerator gen;
  gen.seed = 3;
  gen.min_artists = gen.max_artists = artists;
  gen.min_users = gen.max_users = users;
  gen.max_stream = 1000;
  return generate_problem(gen);
}

void BM_Index(benchmark::State& state, const char* name) {
  const auto p = sized_problem(static_cast<std::size_t>(state.range(0)),
                               static_cast<std::size_t>(state.range(1)));
  const Index idx = make_index(name);
  for (auto _ : state) benchmark::DoNotOptimize(idx.reward(p));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(1));
}
BENCHMARK_CAPTURE(BM_Index, pro_rata, "pro-rata")->Args({20, 200})->Args({100, 1000});
BENCHMARK_CAPTURE(BM_Index, user_centric, "user-centric")->Args({20, 200})->Args({50, 500});
BENCHMARK_CAPTURE(BM_Index, shapley, "shapley")->Args({20, 200})->Args({100, 1000});
BENCHMARK_CAPTURE(BM_Index, deezer_cap, "deezer-cap")->Args({20, 200});

void BM_ShapleyInducedAudit(benchmark::State& state) {
  const auto sample = generate_profiles(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        verify_shapley_induced(decompositions::shapley(), induced_games::shapley(), sample));
  }
}
BENCHMARK(BM_ShapleyInducedAudit)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_AxiomSearch(benchmark::State& state, const char* name, Axiom axiom) {
  const Index idx = make_index(name);
  SearchOptions options;
  options.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_counterexample(
        idx, axiom, generator_for(axiom, 42), static_cast<std::size_t>(state.range(0)), options));
  }
}
BENCHMARK_CAPTURE(BM_AxiomSearch, pro_rata_additivity, "pro-rata", Axiom::kAdditivity)
    ->Arg(100)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AxiomSearch, shapley_artists, "shapley", Axiom::kEqualImpactOfArtists)
    ->Arg(100)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
