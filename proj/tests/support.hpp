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

// Instance generators and brute-force reference evaluators shared by the
// unit and acceptance tests. The evaluators work from adjacency matrices and
// explicit membership sets and deliberately share no code with the library.

#ifndef ENCOD_TESTS_SUPPORT_HPP_
#define ENCOD_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "encod/cover.hpp"
#include "encod/features.hpp"
#include "encod/graph.hpp"
#include "encod/partition.hpp"

namespace encod::testing {

using Matrix = std::vector<std::vector<int>>;

std::string data_path(const std::string& relative);

// Erdos-Renyi G(n, p) from std::mt19937_64.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

// Random partition with labels drawn from [0, groups).
DisjointPartition random_partition(std::size_t n, std::size_t groups,
                                   std::uint64_t seed);

// Random cover with `count` communities of random members. Every vertex is
// placed in at least one community; thresholds are drawn from
// [tau_low, 1] when `random_thresholds` is set.
OverlapCover random_cover(std::size_t n, std::size_t count, std::uint64_t seed,
                          bool random_thresholds = false,
                          double tau_low = 0.3);

// Strictly positive rows normalized to sum 1.
FeatureMatrix random_features(std::size_t n, std::size_t dim,
                              std::uint64_t seed);

Matrix adjacency_matrix(const Graph& graph);

// All-pairs hop counts inside `members` (others unreachable); -1 marks an
// unreachable pair.
Matrix floyd_warshall(const Matrix& adjacency, const std::vector<bool>& members);

double brute_clustering(const Matrix& adjacency, std::size_t v,
                        const std::vector<bool>& members);

double brute_modularity(const Matrix& adjacency,
                        const std::vector<std::size_t>& label);

// Rescaled permanence of v in its own community by counting every term.
double brute_permanence(const Matrix& adjacency,
                        const std::vector<std::size_t>& label, std::size_t v);

// Log of the joint edge probability over all unordered pairs, evaluated as
// a product kept in (mantissa, exponent) form.
double brute_log_likelihood(const Matrix& adjacency,
                            const std::vector<std::set<std::size_t>>& cover,
                            const std::vector<double>& thresholds,
                            const FeatureMatrix& features);

std::vector<std::set<std::size_t>> as_sets(const OverlapCover& cover);

double brute_omega(const std::vector<std::set<std::size_t>>& a,
                   const std::vector<std::set<std::size_t>>& b, std::size_t n);

// Spearman rank correlation with average ranks for ties.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace encod::testing

#endif  // ENCOD_TESTS_SUPPORT_HPP_
