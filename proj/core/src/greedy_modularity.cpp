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

#include <map>
#include <queue>
#include <tuple>
#include <vector>

#include "encod/partitioners.hpp"

namespace encod {

namespace {

struct Candidate {
  double delta;
  std::uint32_t i;
  std::uint32_t j;  // i < j
};

// Max-heap on delta; equal deltas prefer the smallest (i, j).
struct CandidateLess {
  bool operator()(const Candidate& a, const Candidate& b) const {
    if (a.delta != b.delta) return a.delta < b.delta;
    return std::tie(a.i, a.j) > std::tie(b.i, b.j);
  }
};

}  // namespace

DisjointPartition greedy_modularity(const Graph& graph,
                                    const VertexOrdering& ordering) {
  const std::size_t n = graph.num_vertices();
  // Initial community of a vertex is its position in the ordering, so the
  // (i, j) tie-break depends on the ordering.
  std::vector<std::uint32_t> position(n);
  for (std::size_t i = 0; i < n; ++i) {
    position[ordering.permutation[i]] = static_cast<std::uint32_t>(i);
  }
  std::vector<std::uint32_t> parent(n);
  for (std::uint32_t c = 0; c < n; ++c) parent[c] = c;

  if (graph.num_edges() > 0) {
    const double two_m = 2.0 * static_cast<double>(graph.num_edges());
    // e[c][d]: fraction of edge ends joining c and d (symmetric, c != d).
    std::vector<std::map<std::uint32_t, double>> e(n);
    std::vector<double> a(n, 0.0);
    for (const Edge& edge : graph.edges()) {
      const auto cu = position[edge.u];
      const auto cv = position[edge.v];
      e[cu][cv] += 1.0 / two_m;
      e[cv][cu] += 1.0 / two_m;
    }
    for (VertexId v = 0; v < n; ++v) {
      a[position[v]] = static_cast<double>(graph.degree(v)) / two_m;
    }

    auto delta = [&](std::uint32_t c, std::uint32_t d) {
      return 2.0 * (e[c].at(d) - a[c] * a[d]);
    };
    std::priority_queue<Candidate, std::vector<Candidate>, CandidateLess> heap;
    for (std::uint32_t c = 0; c < n; ++c) {
      for (const auto& [d, w] : e[c]) {
        if (c < d) heap.push({delta(c, d), c, d});
      }
    }
    std::vector<char> alive(n, 1);
    while (!heap.empty()) {
      const Candidate top = heap.top();
      heap.pop();
      if (!alive[top.i] || !alive[top.j]) continue;
      auto it = e[top.i].find(top.j);
      if (it == e[top.i].end() || delta(top.i, top.j) != top.delta) continue;
      if (top.delta <= 0.0) break;

      // Merge j into i.
      const std::uint32_t keep = top.i;
      const std::uint32_t gone = top.j;
      for (const auto& [d, w] : e[gone]) {
        if (d == keep) continue;
        e[keep][d] += w;
        e[d][keep] += w;
        e[d].erase(gone);
      }
      e[keep].erase(gone);
      e[gone].clear();
      a[keep] += a[gone];
      a[gone] = 0.0;
      alive[gone] = 0;
      parent[gone] = keep;
      for (const auto& [d, w] : e[keep]) {
        heap.push({delta(keep, d), std::min(keep, d), std::max(keep, d)});
      }
    }
  }

  auto find = [&](std::uint32_t c) {
    while (parent[c] != c) c = parent[c];
    return c;
  };
  std::vector<std::uint64_t> label(n);
  for (VertexId v = 0; v < n; ++v) label[v] = find(position[v]);
  return DisjointPartition::from_labels(label, "greedy_modularity",
                                        ordering.seed);
}

}  // namespace encod
