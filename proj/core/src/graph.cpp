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

#include "encod/graph.hpp"

#include <algorithm>
#include <numeric>

#include "encod/errors.hpp"
#include "encod/rng.hpp"
#include "encod/text_io.hpp"

namespace encod {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges,
                        std::vector<std::string> labels) {
  Graph g;
  g.adjacency_.resize(n);
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != n) {
    throw InvariantError("label count does not match vertex count");
  }
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) throw DomainError("edge endpoint out of range");
    if (e.u == e.v) continue;
    g.edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()),
                 g.edges_.end());
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
  g.labels_ = std::move(labels);
  g.ids_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.ids_.emplace(g.labels_[i], static_cast<VertexId>(i)).second) {
      throw DuplicateError(g.labels_[i]);
    }
  }
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  const auto& a = adjacency_[u].size() <= adjacency_[v].size()
                      ? adjacency_[u]
                      : adjacency_[v];
  const VertexId other = &a == &adjacency_[u] ? v : u;
  return std::binary_search(a.begin(), a.end(), other);
}

std::optional<VertexId> Graph::find(std::string_view label) const {
  auto it = ids_.find(std::string(label));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

Graph load_edge_list(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> ids;
  std::vector<Edge> edges;
  auto intern = [&](std::string_view token) {
    auto [it, inserted] =
        ids.emplace(std::string(token), static_cast<VertexId>(labels.size()));
    if (inserted) labels.emplace_back(token);
    return it->second;
  };
  for_each_record(text, [&](std::size_t line_no,
                            std::span<const std::string_view> tokens) {
    if (tokens.size() == 1) {
      intern(tokens[0]);
    } else if (tokens.size() == 2) {
      const VertexId u = intern(tokens[0]);
      const VertexId v = intern(tokens[1]);
      edges.push_back({u, v});
    } else {
      throw ParseError(line_no, "expected 1 or 2 tokens, found " +
                                    std::to_string(tokens.size()));
    }
  });
  const std::size_t n = labels.size();
  return Graph::from_edges(n, edges, std::move(labels));
}

Graph load_edge_list_file(const std::string& path) {
  return load_edge_list(read_file(path));
}

std::string write_edge_list(const Graph& graph) {
  std::string out;
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    out += graph.label(v);
    out += '\n';
  }
  for (const Edge& e : graph.edges()) {
    out += graph.label(e.u);
    out += ' ';
    out += graph.label(e.v);
    out += '\n';
  }
  return out;
}

VertexOrdering random_ordering(const Graph& graph, std::uint64_t seed) {
  VertexOrdering ordering{identity_ordering(graph).permutation, seed};
  Rng rng(seed);
  rng.shuffle(std::span<VertexId>(ordering.permutation));
  return ordering;
}

VertexOrdering identity_ordering(const Graph& graph) {
  VertexOrdering ordering;
  ordering.permutation.resize(graph.num_vertices());
  std::iota(ordering.permutation.begin(), ordering.permutation.end(),
            VertexId{0});
  return ordering;
}

VertexSet::VertexSet(std::size_t n, std::span<const VertexId> members)
    : members_(members.begin(), members.end()), mask_(n, 0) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  for (VertexId v : members_) {
    if (v >= n) throw DomainError("vertex set member out of range");
    mask_[v] = 1;
  }
}

VertexSet VertexSet::all(std::size_t n) {
  std::vector<VertexId> members(n);
  std::iota(members.begin(), members.end(), VertexId{0});
  return VertexSet(n, members);
}

double clustering_coefficient(const Graph& graph, VertexId v,
                              const VertexSet& restrict) {
  if (!restrict.contains(v)) {
    throw DomainError("clustering_coefficient: vertex outside restrict set");
  }
  std::vector<VertexId> inner;
  for (VertexId u : graph.neighbors(v)) {
    if (restrict.contains(u)) inner.push_back(u);
  }
  const std::size_t k = inner.size();
  if (k < 2) return 0.0;
  std::size_t links = 0;
  // inner is sorted, so a merge-style intersection counts each linked pair
  // twice (once from each endpoint).
  for (VertexId a : inner) {
    auto adj = graph.neighbors(a);
    auto i = adj.begin();
    auto j = inner.begin();
    while (i != adj.end() && j != inner.end()) {
      if (*i < *j) {
        ++i;
      } else if (*j < *i) {
        ++j;
      } else {
        ++links;
        ++i;
        ++j;
      }
    }
  }
  return static_cast<double>(links) / static_cast<double>(k * (k - 1));
}

namespace detail {

std::vector<VertexId> bfs_into(const Graph& graph, VertexId source,
                               const VertexSet& restrict,
                               std::vector<std::uint32_t>& dist) {
  if (!restrict.contains(source)) {
    throw DomainError("bfs_distances: source outside restrict set");
  }
  dist.resize(graph.num_vertices(), kUnreached);
  std::vector<VertexId> order{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const VertexId u = order[head];
    for (VertexId w : graph.neighbors(u)) {
      if (dist[w] != kUnreached || !restrict.contains(w)) continue;
      dist[w] = dist[u] + 1;
      order.push_back(w);
    }
  }
  return order;
}

}  // namespace detail

DistanceMap bfs_distances(const Graph& graph, VertexId source,
                          const VertexSet& restrict) {
  std::vector<std::uint32_t> dist;
  const auto order = detail::bfs_into(graph, source, restrict, dist);
  DistanceMap out;
  out.reserve(order.size());
  for (VertexId v : order) out.emplace(v, dist[v]);
  return out;
}

}  // namespace encod
