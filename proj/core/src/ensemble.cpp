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

#include <string>

#include "encod/errors.hpp"
#include "encod/parallel.hpp"
#include "encod/partitioners.hpp"
#include "encod/rng.hpp"

namespace encod {

Algorithm parse_algorithm(std::string_view name) {
  if (name == "louvain") return Algorithm::kLouvain;
  if (name == "lp" || name == "label_propagation") {
    return Algorithm::kLabelPropagation;
  }
  if (name == "greedy" || name == "greedy_modularity" || name == "cnm") {
    return Algorithm::kGreedyModularity;
  }
  throw ConfigError("unknown base algorithm '" + std::string(name) + "'");
}

std::string algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kLouvain:
      return "louvain";
    case Algorithm::kLabelPropagation:
      return "lp";
    case Algorithm::kGreedyModularity:
      return "greedy";
  }
  return "unknown";
}

std::vector<Algorithm> parse_algorithm_list(std::string_view list) {
  std::vector<Algorithm> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    std::size_t comma = list.find(',', pos);
    if (comma == std::string_view::npos) comma = list.size();
    out.push_back(parse_algorithm(list.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

DisjointPartition partition(const Graph& graph, Algorithm algorithm,
                            const VertexOrdering& ordering) {
  if (ordering.permutation.size() != graph.num_vertices()) {
    throw DomainError("ordering does not match the graph's vertex count");
  }
  switch (algorithm) {
    case Algorithm::kLouvain:
      return louvain(graph, ordering);
    case Algorithm::kLabelPropagation:
      return label_propagation(graph, ordering);
    case Algorithm::kGreedyModularity:
      return greedy_modularity(graph, ordering);
  }
  throw ConfigError("unknown base algorithm");
}

std::uint64_t ordering_seed(std::uint64_t base_seed, std::size_t m,
                            std::size_t k) {
  return derive_seed(base_seed, m, k);
}

BaseEnsemble build_ensemble(const Graph& graph,
                            std::span<const Algorithm> algorithms,
                            std::size_t orderings_per_algorithm,
                            std::uint64_t base_seed, std::size_t threads) {
  if (algorithms.empty()) throw ConfigError("no base algorithms given");
  if (orderings_per_algorithm == 0) throw ConfigError("K must be at least 1");
  const std::size_t k_count = orderings_per_algorithm;
  std::vector<DisjointPartition> partitions(algorithms.size() * k_count);
  parallel_for(partitions.size(), threads, [&](std::size_t job) {
    const std::size_t m = job / k_count;
    const std::size_t k = job % k_count;
    const auto ordering =
        random_ordering(graph, ordering_seed(base_seed, m, k));
    partitions[job] = partition(graph, algorithms[m], ordering);
  });
  return BaseEnsemble(std::move(partitions));
}

}  // namespace encod
