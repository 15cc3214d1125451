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
#include <vector>

#include "encod/partitioners.hpp"
#include "encod/rng.hpp"

namespace encod {

namespace {

constexpr std::size_t kMaxSweeps = 100;
constexpr std::uint64_t kTieBreakStream = 0x1abe1;

}  // namespace

DisjointPartition label_propagation(const Graph& graph,
                                    const VertexOrdering& ordering) {
  const std::size_t n = graph.num_vertices();
  std::vector<std::uint64_t> label(n);
  for (VertexId v = 0; v < n; ++v) label[v] = v;

  Rng rng(derive_seed(ordering.seed, kTieBreakStream));
  std::vector<std::uint32_t> count(n, 0);
  std::vector<std::uint64_t> seen;
  std::vector<std::uint64_t> best;

  // Most frequent neighbor labels of v, in ascending label order.
  auto dominant = [&](VertexId v) {
    seen.clear();
    best.clear();
    std::uint32_t top = 0;
    for (VertexId u : graph.neighbors(v)) {
      const auto l = label[u];
      if (count[l]++ == 0) seen.push_back(l);
      top = std::max(top, count[l]);
    }
    std::sort(seen.begin(), seen.end());
    for (auto l : seen) {
      if (count[l] == top) best.push_back(l);
      count[l] = 0;
    }
  };

  for (std::size_t sweep = 0; sweep < kMaxSweeps; ++sweep) {
    for (VertexId v : ordering.permutation) {
      if (graph.degree(v) == 0) continue;
      dominant(v);
      label[v] = best.size() == 1 ? best.front()
                                  : best[rng.uniform_index(best.size())];
    }
    // Classic stopping rule: every vertex already carries one of its
    // dominant neighbor labels.
    bool stable = true;
    for (VertexId v = 0; v < n && stable; ++v) {
      if (graph.degree(v) == 0) continue;
      dominant(v);
      stable = std::binary_search(best.begin(), best.end(), label[v]);
    }
    if (stable) break;
  }
  return DisjointPartition::from_labels(label, "label_propagation",
                                        ordering.seed);
}

}  // namespace encod
