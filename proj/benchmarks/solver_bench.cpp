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

#include "cwpath/construct.hpp"
#include "cwpath/pairing.hpp"
#include "cwpath/random.hpp"

namespace {

using namespace cwpath;

std::array<VertexId, 3> draw(const CayleyGraph& g, Rng& rng) {
  std::array<VertexId, 3> t{};
  do {
    for (auto& v : t) v = static_cast<VertexId>(rng.below(g.vertex_count()));
  } while (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]);
  return t;
}

void BM_SolveTripod(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CayleyGraph g = CayleyGraph::build(n, Family::Wheel);
  const StructureTarget target = StructureTarget::for_degree(n);
  Rng rng(1);
  for (auto _ : state) {
    const auto omega = draw(g, rng);
    benchmark::DoNotOptimize(solve_tripod(g.full_view(), omega, target));
  }
}
BENCHMARK(BM_SolveTripod)->DenseRange(4, 7)->Unit(benchmark::kMicrosecond);

void BM_BuildStructure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CayleyGraph g = CayleyGraph::build(n, Family::Wheel);
  ConstructOptions options;
  options.strict = true;
  Rng rng(2);
  for (auto _ : state) {
    const auto omega = draw(g, rng);
    const Construction c = build_structure(g, omega, options);
    benchmark::DoNotOptimize(pair_structure(g.full_view(), c.structure));
  }
}
BENCHMARK(BM_BuildStructure)->Arg(5)->Arg(7)->Unit(benchmark::kMicrosecond);

void BM_Pi3Upper(benchmark::State& state) {
  const CayleyGraph g =
      CayleyGraph::build(static_cast<int>(state.range(0)), Family::Wheel);
  for (auto _ : state) benchmark::DoNotOptimize(pi3_upper(g));
}
BENCHMARK(BM_Pi3Upper)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
