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

#include "encod/cover.hpp"

#include <algorithm>

#include "encod/errors.hpp"
#include "encod/text_io.hpp"

namespace encod {

OverlapCover::OverlapCover(std::size_t num_vertices,
                           std::vector<std::vector<VertexId>> communities,
                           std::vector<double> thresholds)
    : communities_(std::move(communities)),
      thresholds_(std::move(thresholds)),
      memberships_(num_vertices) {
  if (thresholds_.empty()) thresholds_.assign(communities_.size(), 1.0);
  if (thresholds_.size() != communities_.size()) {
    throw DomainError("cover: one threshold per community is required");
  }
  for (std::size_t j = 0; j < communities_.size(); ++j) {
    auto& members = communities_[j];
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (VertexId v : members) {
      if (v >= num_vertices) throw DomainError("cover: vertex out of range");
      memberships_[v].push_back(static_cast<std::uint32_t>(j));
    }
  }
}

OverlapCover OverlapCover::singletons(std::size_t num_vertices) {
  std::vector<std::vector<VertexId>> communities(num_vertices);
  for (VertexId v = 0; v < num_vertices; ++v) communities[v] = {v};
  return OverlapCover(num_vertices, std::move(communities));
}

OverlapCover OverlapCover::from_partition(const DisjointPartition& partition) {
  std::vector<std::vector<VertexId>> communities;
  for (CommunityId c = 0; c < partition.community_count(); ++c) {
    const auto members = partition.members(c);
    communities.emplace_back(members.begin(), members.end());
  }
  return OverlapCover(partition.num_vertices(), std::move(communities));
}

double OverlapCover::max_threshold() const {
  double best = 0.0;
  for (double t : thresholds_) best = std::max(best, t);
  return best;
}

bool OverlapCover::contains(std::size_t j, VertexId v) const {
  return std::binary_search(communities_[j].begin(), communities_[j].end(), v);
}

bool OverlapCover::is_valid() const {
  for (const auto& c : communities_) {
    if (c.empty()) return false;
  }
  for (const auto& m : memberships_) {
    if (m.empty()) return false;
  }
  return true;
}

std::vector<std::vector<VertexId>> OverlapCover::canonical() const {
  auto out = communities_;
  std::sort(out.begin(), out.end());
  return out;
}

OverlapCover ingest_cover(std::string_view text, const Graph& graph,
                          std::vector<std::string>* warnings) {
  const std::size_t n = graph.num_vertices();
  std::vector<std::vector<VertexId>> communities;
  std::vector<char> seen(n, 0);
  for_each_record(text, [&](std::size_t,
                            std::span<const std::string_view> tokens) {
    std::vector<VertexId> members;
    members.reserve(tokens.size());
    for (auto token : tokens) {
      auto v = graph.find(token);
      if (!v) throw LabelError(std::string(token));
      members.push_back(*v);
      seen[*v] = 1;
    }
    communities.push_back(std::move(members));
  });
  for (VertexId v = 0; v < n; ++v) {
    if (seen[v]) continue;
    communities.push_back({v});
    if (warnings) {
      warnings->push_back("vertex '" + graph.label(v) +
                          "' is in no community; added as a singleton");
    }
  }
  return OverlapCover(n, std::move(communities));
}

std::string write_cover(const Graph& graph, const OverlapCover& cover) {
  std::string out;
  for (const auto& members : cover.communities()) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i > 0) out += ' ';
      out += graph.label(members[i]);
    }
    out += '\n';
  }
  return out;
}

std::string write_thresholds(const OverlapCover& cover) {
  std::string out;
  for (std::size_t j = 0; j < cover.size(); ++j) {
    out += std::to_string(j);
    out += ' ';
    out += format_real(cover.threshold(j));
    out += '\n';
  }
  return out;
}

}  // namespace encod
