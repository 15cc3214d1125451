// Copyright 2026 The EnCoD Authors.
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

#include "encod/features.hpp"
#include "encod/optimizer.hpp"
#include "encod/partitioners.hpp"
#include "encod/similarity.hpp"
#include "encod/synthgen.hpp"

namespace encod {
namespace {

PlantedInstance instance(std::size_t n) {
  PlantedConfig c;
  c.n = n;
  c.communities = 8;
  c.community_size = n / 8 + n / 16;
  c.overlap_fraction = 0.3;
  c.p_in = 0.3;
  c.p_out = 0.01;
  c.seed = 1;
  return generate_planted(c);
}

const Algorithm kAlgorithms[] = {Algorithm::kLouvain,
                                 Algorithm::kLabelPropagation,
                                 Algorithm::kGreedyModularity};

void BM_Louvain(benchmark::State& state) {
  const auto inst = instance(static_cast<std::size_t>(state.range(0)));
  const auto ordering = random_ordering(inst.graph, 3);
  for (auto _ : state) benchmark::DoNotOptimize(louvain(inst.graph, ordering));
}
BENCHMARK(BM_Louvain)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_GreedyModularity(benchmark::State& state) {
  const auto inst = instance(static_cast<std::size_t>(state.range(0)));
  const auto ordering = random_ordering(inst.graph, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_modularity(inst.graph, ordering));
  }
}
BENCHMARK(BM_GreedyModularity)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_ExtractFeatures(benchmark::State& state) {
  const auto inst = instance(256);
  const auto ensemble = build_ensemble(inst.graph, kAlgorithms, 8, 1);
  const auto kind = static_cast<InvolvementKind>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_features(ensemble, inst.graph, kind));
  }
  state.SetLabel(involvement_name(kind));
}
BENCHMARK(BM_ExtractFeatures)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

// Exact likelihood on the cover a short optimization run settles on.
void BM_LogLikelihood(benchmark::State& state) {
  const auto inst = instance(static_cast<std::size_t>(state.range(0)));
  const auto ensemble = build_ensemble(inst.graph, kAlgorithms, 2, 1);
  const auto features =
      extract_features(ensemble, inst.graph, InvolvementKind::kPermanence);
  const SimilarityTable sim(features, SimilarityKind::kCosine);
  EncodConfig config;
  config.max_iterations = 32;
  const OverlapCover cover = run(inst.graph, sim, config).cover;
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_likelihood(inst.graph, cover, sim));
  }
  state.counters["communities"] = static_cast<double>(cover.size());
}
BENCHMARK(BM_LogLikelihood)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_EstimatedLogLikelihood(benchmark::State& state) {
  const auto inst = instance(256);
  const auto ensemble = build_ensemble(inst.graph, kAlgorithms, 2, 1);
  const auto features =
      extract_features(ensemble, inst.graph, InvolvementKind::kPermanence);
  const SimilarityTable sim(features, SimilarityKind::kCosine);
  EncodConfig config;
  config.max_iterations = 32;
  const OverlapCover cover = run(inst.graph, sim, config).cover;
  const PairSample sample =
      sample_pairs(256, static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        estimate_log_likelihood(inst.graph, cover, sim, sample));
  }
}
BENCHMARK(BM_EstimatedLogLikelihood)->Arg(1000)->Arg(8000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace encod

BENCHMARK_MAIN();
