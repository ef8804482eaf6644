// Copyright 2026 The Miura Flip Graph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "miura/coloring.hpp"
#include "miura/flip_graph.hpp"
#include "miura/forest.hpp"
#include "miura/heights_distance.hpp"

namespace {

using namespace miura;

void BM_EnumerateValid(benchmark::State& state) {
  const auto spec = MiuraSpec::strip(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_valid(spec));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(closed_form_vertex_count(spec.cols())));
}
BENCHMARK(BM_EnumerateValid)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_BuildCreaseOfg(benchmark::State& state) {
  const auto spec = MiuraSpec::strip(static_cast<int>(state.range(0)));
  const BuildOptions options{.threads = static_cast<unsigned>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(build_crease_ofg(spec, options));
}
BENCHMARK(BM_BuildCreaseOfg)
    ->ArgsProduct({{7, 9, 11}, {1, 4}})
    ->Unit(benchmark::kMillisecond);

void BM_BuildColoringOfg(benchmark::State& state) {
  const MiuraSpec spec(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_coloring_ofg(spec, {.threads = 1}));
}
BENCHMARK(BM_BuildColoringOfg)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_DiameterBfs(benchmark::State& state) {
  const auto g = build_ofg(MiuraSpec::strip(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(diameter_bfs(g, 1));
}
BENCHMARK(BM_DiameterBfs)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_OfgDistance(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto all = enumerate_valid(MiuraSpec::strip(n));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::vector<std::pair<std::size_t, std::size_t>> pairs(1024);
  for (auto& p : pairs) p = {pick(rng), pick(rng)};
  std::size_t k = 0;
  for (auto _ : state) {
    const auto [i, j] = pairs[k++ % pairs.size()];
    benchmark::DoNotOptimize(ofg_distance(all[i], all[j]));
  }
}
BENCHMARK(BM_OfgDistance)->Arg(6)->Arg(10)->Arg(14);

void BM_BfsSingleSource(benchmark::State& state) {
  const auto g = build_ofg(MiuraSpec::strip(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(bfs_distances(g, 0));
}
BENCHMARK(BM_BfsSingleSource)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_GenerateChiD(benchmark::State& state) {
  const int generations = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_chi_d(generations));
}
BENCHMARK(BM_GenerateChiD)->Arg(20)->Arg(40);

void BM_PolynomialLaws(benchmark::State& state) {
  const auto tables = generate_chi_d(20);
  for (auto _ : state) benchmark::DoNotOptimize(polynomial_law_checks(tables, 10, 6));
}
BENCHMARK(BM_PolynomialLaws)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
