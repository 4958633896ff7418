// Copyright 2026 The cwpath Authors.
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

#include "cwpath/menger.hpp"
#include "cwpath/topology.hpp"

namespace {

using cwpath::CayleyGraph;
using cwpath::Family;

void BM_BuildWheel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(CayleyGraph::build(n, Family::Wheel));
}
BENCHMARK(BM_BuildWheel)->DenseRange(4, 7)->Unit(benchmark::kMicrosecond);

void BM_RankUnrank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto total = cwpath::factorial(n);
  cwpath::VertexId k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cwpath::rank(cwpath::unrank(k, n)));
    k = (k + 7919) % total;
  }
}
BENCHMARK(BM_RankUnrank)->Arg(5)->Arg(8);

void BM_DisjointPaths(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CayleyGraph g = CayleyGraph::build(n, Family::Wheel);
  const auto full = g.full_view();
  const auto far = static_cast<cwpath::VertexId>(g.vertex_count() - 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(cwpath::max_internally_disjoint_paths(full, 0, far));
}
BENCHMARK(BM_DisjointPaths)->DenseRange(4, 7)->Unit(benchmark::kMicrosecond);

}  // namespace
