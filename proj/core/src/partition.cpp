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

#include "encod/partition.hpp"

#include <optional>
#include <unordered_map>

#include "encod/errors.hpp"
#include "encod/text_io.hpp"

namespace encod {

DisjointPartition DisjointPartition::from_labels(
    std::span<const std::uint64_t> labels, std::string algorithm,
    std::uint64_t seed) {
  DisjointPartition p;
  p.algorithm_ = std::move(algorithm);
  p.seed_ = seed;
  p.assignment_.resize(labels.size());
  std::unordered_map<std::uint64_t, CommunityId> compact;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto [it, inserted] = compact.emplace(
        labels[v], static_cast<CommunityId>(p.members_.size()));
    if (inserted) p.members_.emplace_back();
    p.assignment_[v] = it->second;
    p.members_[it->second].push_back(static_cast<VertexId>(v));
  }
  return p;
}

BaseEnsemble::BaseEnsemble(std::vector<DisjointPartition> partitions)
    : partitions_(std::move(partitions)) {
  for (const auto& p : partitions_) {
    if (p.num_vertices() != partitions_.front().num_vertices()) {
      throw InvariantError("ensemble partitions cover different vertex sets");
    }
    total_communities_ += p.community_count();
  }
}

double modularity(const Graph& graph, const DisjointPartition& partition) {
  const double m = static_cast<double>(graph.num_edges());
  if (m == 0.0) return 0.0;
  std::vector<double> internal(partition.community_count(), 0.0);
  std::vector<double> degree(partition.community_count(), 0.0);
  for (const Edge& e : graph.edges()) {
    const CommunityId cu = partition.community_of(e.u);
    if (cu == partition.community_of(e.v)) internal[cu] += 1.0;
  }
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    degree[partition.community_of(v)] +=
        static_cast<double>(graph.degree(v));
  }
  double q = 0.0;
  for (std::size_t c = 0; c < internal.size(); ++c) {
    const double frac = degree[c] / (2.0 * m);
    q += internal[c] / m - frac * frac;
  }
  return q;
}

DisjointPartition ingest_partition(std::string_view text,
                                   const Graph& graph) {
  const std::size_t n = graph.num_vertices();
  std::vector<std::optional<std::uint64_t>> labels(n);
  std::unordered_map<std::string, std::uint64_t> community_ids;
  for_each_record(text, [&](std::size_t line,
                            std::span<const std::string_view> tokens) {
    if (tokens.size() != 2) {
      throw ParseError(line, "expected '<vertex> <community>'");
    }
    auto v = graph.find(tokens[0]);
    if (!v) throw LabelError(std::string(tokens[0]));
    if (labels[*v]) throw DuplicateError(std::string(tokens[0]));
    auto [it, inserted] =
        community_ids.emplace(std::string(tokens[1]), community_ids.size());
    labels[*v] = it->second;
  });
  std::vector<std::uint64_t> dense(n);
  for (VertexId v = 0; v < n; ++v) {
    if (!labels[v]) throw CoverageError(graph.label(v));
    dense[v] = *labels[v];
  }
  return DisjointPartition::from_labels(dense, "external", 0);
}

std::string write_partition(const Graph& graph,
                            const DisjointPartition& partition) {
  std::string out;
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    out += graph.label(v);
    out += ' ';
    out += std::to_string(partition.community_of(v));
    out += '\n';
  }
  return out;
}

}  // namespace encod
