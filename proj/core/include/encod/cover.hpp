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

#ifndef ENCOD_COVER_HPP_
#define ENCOD_COVER_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "encod/graph.hpp"
#include "encod/partition.hpp"

namespace encod {

// A family of possibly overlapping vertex communities, each with a
// threshold, plus the per-vertex membership index. Members are kept sorted.
class OverlapCover {
 public:
  OverlapCover() = default;

  // Thresholds default to 1.0 when omitted. Members are sorted and
  // deduplicated. Throws DomainError for out-of-range vertices or a
  // threshold list of the wrong length.
  OverlapCover(std::size_t num_vertices,
               std::vector<std::vector<VertexId>> communities,
               std::vector<double> thresholds = {});

  // One singleton community per vertex, all thresholds 1.
  static OverlapCover singletons(std::size_t num_vertices);
  static OverlapCover from_partition(const DisjointPartition& partition);

  std::size_t num_vertices() const { return memberships_.size(); }
  std::size_t size() const { return communities_.size(); }

  std::span<const VertexId> community(std::size_t j) const {
    return communities_[j];
  }
  const std::vector<std::vector<VertexId>>& communities() const {
    return communities_;
  }
  double threshold(std::size_t j) const { return thresholds_[j]; }
  std::span<const double> thresholds() const { return thresholds_; }
  // Largest threshold, 0 for an empty cover.
  double max_threshold() const;

  // Community indices containing v, ascending.
  std::span<const std::uint32_t> memberships(VertexId v) const {
    return memberships_[v];
  }
  bool contains(std::size_t j, VertexId v) const;

  // Every vertex in some community and no community empty.
  bool is_valid() const;

  // Canonical form: communities sorted lexicographically, then thresholds
  // dropped. Two covers with equal canonical forms hold the same sets.
  std::vector<std::vector<VertexId>> canonical() const;

  friend bool operator==(const OverlapCover&, const OverlapCover&) = default;

 private:
  std::vector<std::vector<VertexId>> communities_;
  std::vector<double> thresholds_;
  std::vector<std::vector<std::uint32_t>> memberships_;
};

// Reads one community per line as space-separated labels. Vertices that
// appear on no line are added as singleton communities and reported in
// `warnings` when it is non-null. Unknown labels throw LabelError.
OverlapCover ingest_cover(std::string_view text, const Graph& graph,
                          std::vector<std::string>* warnings = nullptr);

std::string write_cover(const Graph& graph, const OverlapCover& cover);

// Sidecar listing `<community-index> <threshold>` per line.
std::string write_thresholds(const OverlapCover& cover);

}  // namespace encod

#endif  // ENCOD_COVER_HPP_
