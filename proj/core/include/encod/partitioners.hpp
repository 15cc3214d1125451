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

// Native disjoint community detectors used to build the base ensemble. Each
// one consumes a VertexOrdering wherever its definition leaves the visit
// order free, so different orderings give different (but reproducible)
// partitions.

#ifndef ENCOD_PARTITIONERS_HPP_
#define ENCOD_PARTITIONERS_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "encod/graph.hpp"
#include "encod/partition.hpp"

namespace encod {

enum class Algorithm { kLouvain, kLabelPropagation, kGreedyModularity };

// Accepts "louvain", "lp" / "label_propagation", "greedy" /
// "greedy_modularity". Throws ConfigError otherwise.
Algorithm parse_algorithm(std::string_view name);
std::string algorithm_name(Algorithm algorithm);

// Parses a comma-separated list such as "louvain,lp,greedy".
std::vector<Algorithm> parse_algorithm_list(std::string_view list);

// Runs one detector. Deterministic in (graph, algorithm, ordering).
DisjointPartition partition(const Graph& graph, Algorithm algorithm,
                            const VertexOrdering& ordering);

DisjointPartition louvain(const Graph& graph, const VertexOrdering& ordering);

// Asynchronous label propagation with a hard cap of 100 sweeps.
DisjointPartition label_propagation(const Graph& graph,
                                    const VertexOrdering& ordering);

// Clauset-Newman-Moore agglomeration.
DisjointPartition greedy_modularity(const Graph& graph,
                                    const VertexOrdering& ordering);

// Seed of the k-th ordering of the m-th algorithm.
std::uint64_t ordering_seed(std::uint64_t base_seed, std::size_t m,
                            std::size_t k);

// Runs every algorithm on `orderings_per_algorithm` random orderings.
// Partitions are stored algorithm-major. Jobs run on `threads` workers; the
// result does not depend on the worker count.
BaseEnsemble build_ensemble(const Graph& graph,
                            std::span<const Algorithm> algorithms,
                            std::size_t orderings_per_algorithm,
                            std::uint64_t base_seed, std::size_t threads = 1);

}  // namespace encod

#endif  // ENCOD_PARTITIONERS_HPP_
