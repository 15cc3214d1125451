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

#ifndef ENCOD_GRAPH_HPP_
#define ENCOD_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace encod {

using VertexId = std::uint32_t;

struct Edge {
  VertexId u;
  VertexId v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable undirected simple graph over dense ids 0..n-1, with a
// bidirectional mapping to external string labels.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from an edge list over 0..n-1. Self-loops and duplicate
  // edges are dropped. `labels` defaults to the decimal ids.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  // Sorted neighbor list.
  std::span<const VertexId> neighbors(VertexId v) const {
    return adjacency_[v];
  }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }

  // Edges with u < v, sorted lexicographically.
  std::span<const Edge> edges() const { return edges_; }

  bool has_edge(VertexId u, VertexId v) const;

  const std::string& label(VertexId v) const { return labels_[v]; }
  std::span<const std::string> labels() const { return labels_; }
  std::optional<VertexId> find(std::string_view label) const;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> ids_;
};

// Parses the whitespace-separated edge-list format. Lines starting with '#'
// and blank lines are skipped; one-token lines declare a vertex. Labels get
// ids in order of first appearance. Throws ParseError on any other token
// count.
Graph load_edge_list(std::string_view text);
Graph load_edge_list_file(const std::string& path);

// Writes one declaration line per vertex (in id order) followed by the
// edges, so that reloading reproduces the same ids.
std::string write_edge_list(const Graph& graph);

struct VertexOrdering {
  std::vector<VertexId> permutation;
  std::uint64_t seed = 0;
};

// Fisher-Yates permutation of 0..n-1, deterministic in `seed`.
VertexOrdering random_ordering(const Graph& graph, std::uint64_t seed);

// Identity ordering (seed 0).
VertexOrdering identity_ordering(const Graph& graph);

// A subset of the vertices with O(1) membership tests.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::size_t n, std::span<const VertexId> members);
  static VertexSet all(std::size_t n);

  bool contains(VertexId v) const { return v < mask_.size() && mask_[v]; }
  std::span<const VertexId> members() const { return members_; }
  std::size_t size() const { return members_.size(); }

 private:
  std::vector<VertexId> members_;
  std::vector<char> mask_;
};

// Fraction of linked pairs among v's neighbors inside G[restrict]. Zero when
// v has fewer than two neighbors there. Throws DomainError if v is not in
// `restrict`.
double clustering_coefficient(const Graph& graph, VertexId v,
                              const VertexSet& restrict);

using DistanceMap = std::unordered_map<VertexId, std::uint32_t>;

// Hop distances from `source` inside G[restrict]; unreachable vertices are
// absent. Throws DomainError if source is not in `restrict`.
DistanceMap bfs_distances(const Graph& graph, VertexId source,
                          const VertexSet& restrict);

namespace detail {

inline constexpr std::uint32_t kUnreached = UINT32_MAX;

// BFS into a caller-owned dense buffer of size n whose entries must all be
// kUnreached on entry. Returns the visited vertices in BFS order; the caller
// resets exactly those entries before reusing the buffer.
std::vector<VertexId> bfs_into(const Graph& graph, VertexId source,
                               const VertexSet& restrict,
                               std::vector<std::uint32_t>& dist);

}  // namespace detail

}  // namespace encod

#endif  // ENCOD_GRAPH_HPP_
