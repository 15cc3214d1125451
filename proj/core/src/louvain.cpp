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

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "encod/errors.hpp"
#include "encod/partitioners.hpp"

namespace encod {

namespace {

// Weighted graph of one aggregation level. Self-loop weight counts the
// internal edges of the merged node once.
struct LevelGraph {
  std::vector<std::vector<std::pair<std::uint32_t, double>>> adj;
  std::vector<double> self_loop;
  std::vector<double> degree;  // weighted degree, self loops counted twice

  std::size_t size() const { return adj.size(); }
};

LevelGraph initial_level(const Graph& graph) {
  const std::size_t n = graph.num_vertices();
  LevelGraph level;
  level.adj.resize(n);
  level.self_loop.assign(n, 0.0);
  level.degree.assign(n, 0.0);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId u : graph.neighbors(v)) level.adj[v].push_back({u, 1.0});
    level.degree[v] = static_cast<double>(graph.degree(v));
  }
  return level;
}

// One local-moving phase. `order` lists the level's nodes in visit order.
// Returns true if any node changed community.
bool local_moving(const LevelGraph& level, const std::vector<std::uint32_t>& order,
                  double two_m, std::vector<std::uint32_t>& community) {
  const std::size_t n = level.size();
  std::vector<double> total(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) total[community[i]] += level.degree[i];

  std::vector<double> link(n, 0.0);
  std::vector<std::uint32_t> touched;
  bool any_move = false;
  constexpr std::size_t kMaxSweeps = 1000;
  for (std::size_t sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool moved = false;
    for (std::uint32_t node : order) {
      const std::uint32_t own = community[node];
      const double k = level.degree[node];
      touched.clear();
      touched.push_back(own);
      link[own] = 0.0;
      for (auto [nbr, w] : level.adj[node]) {
        const std::uint32_t c = community[nbr];
        if (link[c] == 0.0 && c != own) touched.push_back(c);
        link[c] += w;
      }
      total[own] -= k;

      // Gain of inserting `node` into c, up to a positive constant factor.
      auto gain = [&](std::uint32_t c) { return link[c] - total[c] * k / two_m; };
      const double stay = gain(own);
      std::uint32_t best = own;
      double best_gain = stay;
      for (std::uint32_t c : touched) {
        if (c == own) continue;
        const double g = gain(c);
        if (g > best_gain || (g == best_gain && best != own && c < best)) {
          best = c;
          best_gain = g;
        }
      }
      // Only strict improvements move a node, otherwise equal-gain swaps
      // could cycle forever.
      if (best != own && best_gain <= stay + 1e-12 * (std::abs(stay) + 1.0)) {
        best = own;
      }
      total[best] += k;
      if (best != own) {
        community[node] = best;
        moved = true;
      }
      for (std::uint32_t c : touched) link[c] = 0.0;
    }
    if (!moved) break;
    any_move = true;
  }
  return any_move;
}

}  // namespace

DisjointPartition louvain(const Graph& graph, const VertexOrdering& ordering) {
  const std::size_t n = graph.num_vertices();
  std::vector<std::uint64_t> final_label(n);
  for (VertexId v = 0; v < n; ++v) final_label[v] = v;
  if (graph.num_edges() == 0) {
    return DisjointPartition::from_labels(final_label, "louvain",
                                          ordering.seed);
  }
  const double two_m = 2.0 * static_cast<double>(graph.num_edges());

  LevelGraph level = initial_level(graph);
  std::vector<std::uint32_t> order(ordering.permutation.begin(),
                                   ordering.permutation.end());
  // node_of[v]: node of original vertex v in the current level.
  std::vector<std::uint32_t> node_of(n);
  for (VertexId v = 0; v < n; ++v) node_of[v] = v;

  double previous_q = modularity(
      graph, DisjointPartition::from_labels(final_label, "louvain", 0));
  while (true) {
    const std::size_t size = level.size();
    std::vector<std::uint32_t> community(size);
    for (std::uint32_t i = 0; i < size; ++i) community[i] = i;
    if (!local_moving(level, order, two_m, community)) break;

    // Renumber communities by first appearance along the visit order; the
    // next level visits its nodes in this order.
    constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> renumber(size, kUnset);
    std::uint32_t next = 0;
    for (std::uint32_t node : order) {
      if (renumber[community[node]] == kUnset) renumber[community[node]] = next++;
    }

    LevelGraph coarse;
    coarse.adj.resize(next);
    coarse.self_loop.assign(next, 0.0);
    coarse.degree.assign(next, 0.0);
    std::vector<double> scratch(next, 0.0);
    std::vector<std::uint32_t> touched;
    // Group level nodes by new community to build merged adjacency rows.
    std::vector<std::vector<std::uint32_t>> groups(next);
    for (std::uint32_t i = 0; i < size; ++i) {
      groups[renumber[community[i]]].push_back(i);
    }
    for (std::uint32_t c = 0; c < next; ++c) {
      touched.clear();
      for (std::uint32_t i : groups[c]) {
        coarse.degree[c] += level.degree[i];
        coarse.self_loop[c] += level.self_loop[i];
        for (auto [nbr, w] : level.adj[i]) {
          const std::uint32_t d = renumber[community[nbr]];
          if (d == c) {
            coarse.self_loop[c] += w / 2.0;  // each internal edge seen twice
          } else {
            if (scratch[d] == 0.0) touched.push_back(d);
            scratch[d] += w;
          }
        }
      }
      std::sort(touched.begin(), touched.end());
      for (std::uint32_t d : touched) {
        coarse.adj[c].push_back({d, scratch[d]});
        scratch[d] = 0.0;
      }
    }
    for (VertexId v = 0; v < n; ++v) {
      node_of[v] = renumber[community[node_of[v]]];
      final_label[v] = node_of[v];
    }

    const double q = modularity(
        graph, DisjointPartition::from_labels(final_label, "louvain", 0));
    if (q < previous_q - 1e-12) {
      throw InvariantError("louvain: modularity decreased across levels");
    }
    previous_q = q;

    order.resize(next);
    for (std::uint32_t c = 0; c < next; ++c) order[c] = c;
    if (next == size) break;
    level = std::move(coarse);
  }
  return DisjointPartition::from_labels(final_label, "louvain", ordering.seed);
}

}  // namespace encod
