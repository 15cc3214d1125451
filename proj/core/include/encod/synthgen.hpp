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

// Planted overlapping benchmark graphs and the ensemble co-occurrence
// analysis.

#ifndef ENCOD_SYNTHGEN_HPP_
#define ENCOD_SYNTHGEN_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "encod/cover.hpp"
#include "encod/graph.hpp"
#include "encod/partition.hpp"

namespace encod {

struct PlantedConfig {
  std::size_t n = 128;
  std::size_t communities = 4;
  std::size_t community_size = 40;  // capacity of each community
  double overlap_fraction = 0.1;
  double p_in = 0.3;
  double p_out = 0.01;
  std::uint64_t seed = 42;

  // Throws ConfigError unless c * s >= n, n >= c (no empty community),
  // 0 <= p_out < p_in <= 1 and 0 <= overlap_fraction <= 1.
  void validate() const;
};

struct PlantedInstance {
  Graph graph;
  OverlapCover truth;
};

// Vertex v's home community is v mod c. round(overlap_fraction * n) vertices
// chosen by the seed each join one more community, drawn uniformly among the
// other communities that are still below capacity (a vertex is skipped when
// none is). Pairs sharing a community are joined with probability p_in,
// other pairs with p_out. Labels are the decimal ids.
PlantedInstance generate_planted(const PlantedConfig& config);

struct CurveBin {
  double low = 0.0;
  double high = 0.0;
  double p_edge = 0.0;
  double p_shared = 0.0;
  std::uint64_t pairs = 0;
};

// For every unordered pair, k = (partitions co-assigning the pair) /
// (partitions), bucketed into ten equal bins with k = 1 in the last one.
// Each populated bin reports the edge frequency and the frequency of pairs
// sharing at least one reference community. Empty bins are omitted.
std::vector<CurveBin> cooccurrence_curve(const Graph& graph,
                                         const BaseEnsemble& ensemble,
                                         const OverlapCover& reference);

// Tab-separated `bin_low bin_high p_edge p_shared_comm pair_count` with a
// header row.
std::string write_curve(const std::vector<CurveBin>& curve);

}  // namespace encod

#endif  // ENCOD_SYNTHGEN_HPP_
