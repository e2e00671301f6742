// Copyright 2026 The bsstar Authors
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

#include "bsstar/fault_models.hpp"
#include "bsstar/flow.hpp"
#include "bsstar/verifier.hpp"

namespace {

using namespace bsstar;

void BM_TopologyBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Topology::build(n));
}
BENCHMARK(BM_TopologyBuild)->DenseRange(4, 7)->Unit(benchmark::kMicrosecond);

// One fault set, then max_flow between seeded random pairs with the early
// stop the sweeps use.
void BM_PairFlow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Topology t = Topology::build(n);
  SeededSampler sampler(1);
  FlowNetwork net(t);
  net.set_faults(sample_uniform(t, static_cast<std::uint64_t>(2 * n - 5), sampler));
  const auto pairs = sample_pairs(t.vertex_count(), 256, sampler);
  const int limit = net.min_degree();
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [u, v] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(net.max_flow(u, v, limit));
  }
}
BENCHMARK(BM_PairFlow)->DenseRange(4, 7);

void BM_SetFaults(benchmark::State& state) {
  const Topology t = Topology::build(5);
  SeededSampler sampler(2);
  const FaultSet f = sample_uniform(t, 13, sampler);
  FlowNetwork net(t);
  for (auto _ : state) net.set_faults(f);
}
BENCHMARK(BM_SetFaults);

void BM_Components(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Topology t = Topology::build(n);
  SeededSampler sampler(3);
  const FaultSet f = sample_uniform(t, static_cast<std::uint64_t>(8 * n - 21), sampler);
  for (auto _ : state) benchmark::DoNotOptimize(components(t, f));
}
BENCHMARK(BM_Components)->DenseRange(4, 6);

void BM_StrongMengerAllPairs(benchmark::State& state) {
  const Topology t = Topology::build(4);
  SeededSampler sampler(4);
  const FaultSet f = sample_uniform(t, 3, sampler);
  FlowNetwork net(t);
  const auto pairs = all_pairs(t.vertex_count());
  for (auto _ : state) benchmark::DoNotOptimize(check_strong_menger(net, f, pairs));
}
BENCHMARK(BM_StrongMengerAllPairs)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
