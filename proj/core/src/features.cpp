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

#include "encod/features.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <unordered_map>

#include "encod/errors.hpp"
#include "encod/parallel.hpp"
#include "encod/text_io.hpp"

namespace encod {

namespace {

double closeness(const Graph& graph, VertexId v, const VertexSet& members,
                 std::vector<std::uint32_t>& dist) {
  const auto reached = detail::bfs_into(graph, v, members, dist);
  const double size = static_cast<double>(members.size());
  double total = 0.0;
  for (VertexId u : reached) total += dist[u];
  total += size * static_cast<double>(members.size() - reached.size());
  for (VertexId u : reached) dist[u] = detail::kUnreached;
  if (total == 0.0) return 1.0;  // singleton community
  return std::min(1.0, size / total);
}

double involvement_with(const Graph& graph, VertexId v,
                        const DisjointPartition& partition, CommunityId c,
                        InvolvementKind kind, const VertexSet& members,
                        std::vector<std::uint32_t>& dist) {
  switch (kind) {
    case InvolvementKind::kBinary:
      return 1.0;
    case InvolvementKind::kCloseness:
      return closeness(graph, v, members, dist);
    case InvolvementKind::kPermanence:
      return std::clamp((raw_permanence(graph, v, partition, c) + 1.0) / 2.0,
                        0.0, 1.0);
  }
  return 0.0;
}

}  // namespace

InvolvementKind parse_involvement(std::string_view name) {
  if (name == "closeness") return InvolvementKind::kCloseness;
  if (name == "permanence") return InvolvementKind::kPermanence;
  if (name == "binary") return InvolvementKind::kBinary;
  throw ConfigError("unknown involvement function '" + std::string(name) +
                    "'");
}

std::string involvement_name(InvolvementKind kind) {
  switch (kind) {
    case InvolvementKind::kCloseness:
      return "closeness";
    case InvolvementKind::kPermanence:
      return "permanence";
    case InvolvementKind::kBinary:
      return "binary";
  }
  return "unknown";
}

double raw_permanence(const Graph& graph, VertexId v,
                      const DisjointPartition& partition, CommunityId c) {
  if (partition.community_of(v) != c) {
    throw DomainError("permanence: vertex is not a member of the community");
  }
  const std::size_t degree = graph.degree(v);
  if (degree == 0) return 0.0;

  std::vector<VertexId> internal;
  std::unordered_map<CommunityId, std::size_t> external;
  std::size_t e_max = 0;
  for (VertexId u : graph.neighbors(v)) {
    const CommunityId cu = partition.community_of(u);
    if (cu == c) {
      internal.push_back(u);
    } else {
      e_max = std::max(e_max, ++external[cu]);
    }
  }
  if (e_max == 0) e_max = 1;

  double c_in = 0.0;
  if (internal.size() >= 2) {
    std::size_t links = 0;
    for (std::size_t i = 0; i < internal.size(); ++i) {
      for (std::size_t j = i + 1; j < internal.size(); ++j) {
        if (graph.has_edge(internal[i], internal[j])) ++links;
      }
    }
    const double k = static_cast<double>(internal.size());
    c_in = static_cast<double>(links) / (k * (k - 1.0) / 2.0);
  }
  return static_cast<double>(internal.size()) /
             (static_cast<double>(degree) * static_cast<double>(e_max)) -
         (1.0 - c_in);
}

double involvement(const Graph& graph, VertexId v,
                   const DisjointPartition& partition, CommunityId c,
                   InvolvementKind kind) {
  if (v >= partition.num_vertices() || partition.community_of(v) != c) {
    throw DomainError("involvement: vertex is not a member of the community");
  }
  const VertexSet members(graph.num_vertices(), partition.members(c));
  std::vector<std::uint32_t> dist(graph.num_vertices(), detail::kUnreached);
  return involvement_with(graph, v, partition, c, kind, members, dist);
}

FeatureMatrix extract_features(const BaseEnsemble& ensemble,
                               const Graph& graph, InvolvementKind kind,
                               std::size_t threads) {
  const std::size_t xi = ensemble.total_communities();
  if (xi == 0) throw EmptyEnsembleError();
  const std::size_t n = graph.num_vertices();
  if (ensemble.num_vertices() != n) {
    throw DomainError("ensemble does not cover the graph's vertex set");
  }

  // Distance of each vertex to its own community in every partition.
  const std::size_t parts = ensemble.size();
  std::vector<double> own_distance(parts * n, 1.0);
  std::vector<std::size_t> column_offset(parts, 0);
  for (std::size_t p = 1; p < parts; ++p) {
    column_offset[p] =
        column_offset[p - 1] + ensemble.partitions()[p - 1].community_count();
  }
  parallel_for(parts, threads, [&](std::size_t p) {
    const DisjointPartition& partition = ensemble.partitions()[p];
    std::vector<std::uint32_t> dist(n, detail::kUnreached);
    for (CommunityId c = 0; c < partition.community_count(); ++c) {
      const VertexSet members(n, partition.members(c));
      for (VertexId v : partition.members(c)) {
        own_distance[p * n + v] =
            1.0 - involvement_with(graph, v, partition, c, kind, members, dist);
      }
    }
  });

  FeatureMatrix features(n, xi, FeatureMatrix::Mode::kEnsemble);
  const double xi_d = static_cast<double>(xi);
  for (VertexId v = 0; v < n; ++v) {
    // Non-member entries all sit at distance 1.
    double d_max = xi > parts ? 1.0 : 0.0;
    double af_sum = static_cast<double>(xi - parts);
    for (std::size_t p = 0; p < parts; ++p) {
      d_max = std::max(d_max, own_distance[p * n + v]);
      af_sum += own_distance[p * n + v];
    }
    const double denominator = xi_d * d_max + xi_d - af_sum;
    auto row = features.row(v);
    std::fill(row.begin(), row.end(), (d_max - 1.0 + 1.0) / denominator);
    for (std::size_t p = 0; p < parts; ++p) {
      const CommunityId c = ensemble.partitions()[p].community_of(v);
      row[column_offset[p] + c] =
          (d_max - own_distance[p * n + v] + 1.0) / denominator;
    }
  }
  return features;
}

FeatureMatrix ingest_vertex_features(std::string_view text,
                                     const Graph& graph) {
  const std::size_t n = graph.num_vertices();
  std::vector<std::optional<std::vector<double>>> rows(n);
  std::size_t dim = 0;
  for_each_record(text, [&](std::size_t line,
                            std::span<const std::string_view> tokens) {
    if (tokens.size() < 2) throw ParseError(line, "expected '<label> <v1> ...'");
    if (dim == 0) dim = tokens.size() - 1;
    if (tokens.size() - 1 != dim) {
      throw ParseError(line, "expected " + std::to_string(dim) + " values");
    }
    auto v = graph.find(tokens[0]);
    if (!v) throw LabelError(std::string(tokens[0]));
    if (rows[*v]) throw DuplicateError(std::string(tokens[0]));
    std::vector<double> values;
    values.reserve(dim);
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const double x = parse_real(tokens[i], line);
      if (!(x >= 0.0)) {
        throw DomainError("negative feature value for vertex '" +
                          std::string(tokens[0]) + "'");
      }
      values.push_back(x);
    }
    rows[*v] = std::move(values);
  });

  FeatureMatrix features(n, dim, FeatureMatrix::Mode::kExplicit);
  for (VertexId v = 0; v < n; ++v) {
    if (!rows[v]) throw CoverageError(graph.label(v));
    double sum = 0.0;
    for (double x : *rows[v]) sum += x;
    if (sum == 0.0) {
      throw DegenerateError("feature row of vertex '" + graph.label(v) +
                            "' is all zero");
    }
    auto row = features.row(v);
    for (std::size_t i = 0; i < dim; ++i) {
      row[i] = sum == 1.0 ? (*rows[v])[i] : (*rows[v])[i] / sum;
    }
  }
  return features;
}

std::string write_features(const Graph& graph, const FeatureMatrix& features) {
  std::string out;
  for (VertexId v = 0; v < features.rows(); ++v) {
    out += graph.label(v);
    for (double x : features.row(v)) {
      out += ' ';
      out += format_real(x);
    }
    out += '\n';
  }
  return out;
}

}  // namespace encod
