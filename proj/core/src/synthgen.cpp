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

#include "encod/synthgen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "encod/errors.hpp"
#include "encod/rng.hpp"
#include "encod/text_io.hpp"

namespace encod {

namespace {

constexpr std::uint64_t kOverlapStream = 1;
constexpr std::uint64_t kEdgeStream = 2;
constexpr std::size_t kBins = 10;

bool share_community(const OverlapCover& cover, VertexId u, VertexId v) {
  const auto a = cover.memberships(u);
  const auto b = cover.memberships(v);
  std::size_t i = 0;
  std::size_t k = 0;
  while (i < a.size() && k < b.size()) {
    if (a[i] == b[k]) return true;
    if (a[i] < b[k]) {
      ++i;
    } else {
      ++k;
    }
  }
  return false;
}

}  // namespace

void PlantedConfig::validate() const {
  if (communities == 0) throw ConfigError("community count must be positive");
  if (n < communities) {
    throw ConfigError("fewer vertices than communities leaves some empty");
  }
  if (communities * community_size < n) {
    throw ConfigError("communities * size must be at least n");
  }
  if (!(p_out >= 0.0 && p_out < p_in && p_in <= 1.0)) {
    throw ConfigError("edge probabilities need 0 <= p_out < p_in <= 1");
  }
  if (!(overlap_fraction >= 0.0 && overlap_fraction <= 1.0)) {
    throw ConfigError("overlap fraction must lie in [0, 1]");
  }
}

PlantedInstance generate_planted(const PlantedConfig& config) {
  config.validate();
  const std::size_t n = config.n;
  const std::size_t c = config.communities;

  std::vector<std::vector<VertexId>> members(c);
  for (VertexId v = 0; v < n; ++v) members[v % c].push_back(v);

  Rng pick(derive_seed(config.seed, kOverlapStream));
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  const auto extra = static_cast<std::size_t>(
      std::llround(config.overlap_fraction * static_cast<double>(n)));
  pick.sample_front(std::span<VertexId>(order), extra);
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < extra; ++i) {
    const VertexId v = order[i];
    open.clear();
    for (std::size_t j = 0; j < c; ++j) {
      if (j != v % c && members[j].size() < config.community_size) {
        open.push_back(j);
      }
    }
    if (open.empty()) continue;
    members[open[pick.uniform_index(open.size())]].push_back(v);
  }
  OverlapCover truth(n, std::move(members));

  Rng coin(derive_seed(config.seed, kEdgeStream));
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const double p =
          share_community(truth, u, v) ? config.p_in : config.p_out;
      if (coin.bernoulli(p)) edges.push_back({u, v});
    }
  }
  return {Graph::from_edges(n, edges), std::move(truth)};
}

std::vector<CurveBin> cooccurrence_curve(const Graph& graph,
                                         const BaseEnsemble& ensemble,
                                         const OverlapCover& reference) {
  const std::size_t n = graph.num_vertices();
  const std::size_t parts = ensemble.size();
  if (ensemble.num_vertices() != n || reference.num_vertices() != n) {
    throw DomainError("co-occurrence inputs disagree on the vertex set");
  }
  if (parts == 0) throw EmptyEnsembleError();

  std::array<std::uint64_t, kBins> pairs{};
  std::array<std::uint64_t, kBins> edges{};
  std::array<std::uint64_t, kBins> shared{};
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      std::size_t together = 0;
      for (const auto& p : ensemble.partitions()) {
        if (p.community_of(u) == p.community_of(v)) ++together;
      }
      const std::size_t bin = std::min(kBins - 1, together * kBins / parts);
      ++pairs[bin];
      if (graph.has_edge(u, v)) ++edges[bin];
      if (share_community(reference, u, v)) ++shared[bin];
    }
  }

  std::vector<CurveBin> curve;
  for (std::size_t b = 0; b < kBins; ++b) {
    if (pairs[b] == 0) continue;
    const double total = static_cast<double>(pairs[b]);
    curve.push_back({static_cast<double>(b) / kBins,
                     static_cast<double>(b + 1) / kBins,
                     static_cast<double>(edges[b]) / total,
                     static_cast<double>(shared[b]) / total, pairs[b]});
  }
  return curve;
}

std::string write_curve(const std::vector<CurveBin>& curve) {
  std::string out = "bin_low\tbin_high\tp_edge\tp_shared_comm\tpair_count\n";
  for (const auto& bin : curve) {
    out += format_real(bin.low) + '\t' + format_real(bin.high) + '\t' +
           format_real(bin.p_edge) + '\t' + format_real(bin.p_shared) + '\t' +
           std::to_string(bin.pairs) + '\n';
  }
  return out;
}

}  // namespace encod
