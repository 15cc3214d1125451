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

#ifndef ENCOD_PARTITION_HPP_
#define ENCOD_PARTITION_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "encod/graph.hpp"

namespace encod {

using CommunityId = std::uint32_t;

// One base community structure: every vertex carries exactly one community
// index in 0..community_count-1 and every index is used.
class DisjointPartition {
 public:
  DisjointPartition() = default;

  // Compacts arbitrary labels to 0..c-1 in order of first appearance along
  // the vertex ids. Throws InvariantError if `assignment` is empty but
  // would need communities (never happens for n == 0).
  static DisjointPartition from_labels(std::span<const std::uint64_t> labels,
                                       std::string algorithm,
                                       std::uint64_t seed);

  std::size_t num_vertices() const { return assignment_.size(); }
  std::size_t community_count() const { return members_.size(); }

  CommunityId community_of(VertexId v) const { return assignment_[v]; }
  std::span<const CommunityId> assignment() const { return assignment_; }

  // Sorted member list of community c.
  std::span<const VertexId> members(CommunityId c) const {
    return members_[c];
  }

  const std::string& algorithm() const { return algorithm_; }
  std::uint64_t seed() const { return seed_; }

  friend bool operator==(const DisjointPartition& a,
                         const DisjointPartition& b) {
    return a.assignment_ == b.assignment_ && a.algorithm_ == b.algorithm_ &&
           a.seed_ == b.seed_;
  }

 private:
  std::vector<CommunityId> assignment_;
  std::vector<std::vector<VertexId>> members_;
  std::string algorithm_;
  std::uint64_t seed_ = 0;
};

// The ordered collection of all base partitions and the total community
// count across them.
class BaseEnsemble {
 public:
  BaseEnsemble() = default;
  explicit BaseEnsemble(std::vector<DisjointPartition> partitions);

  std::span<const DisjointPartition> partitions() const { return partitions_; }
  std::size_t size() const { return partitions_.size(); }
  std::size_t total_communities() const { return total_communities_; }
  std::size_t num_vertices() const {
    return partitions_.empty() ? 0 : partitions_.front().num_vertices();
  }

  friend bool operator==(const BaseEnsemble&, const BaseEnsemble&) = default;

 private:
  std::vector<DisjointPartition> partitions_;
  std::size_t total_communities_ = 0;
};

// Newman-Girvan modularity Q = sum_c [ e_c/m - (d_c/2m)^2 ]. Zero for graphs
// without edges.
double modularity(const Graph& graph, const DisjointPartition& partition);

// Reads `<label> <community-id>` lines. Community ids are arbitrary tokens
// and are compacted in order of first appearance along the vertex ids.
DisjointPartition ingest_partition(std::string_view text, const Graph& graph);

std::string write_partition(const Graph& graph,
                            const DisjointPartition& partition);

}  // namespace encod

#endif  // ENCOD_PARTITION_HPP_
