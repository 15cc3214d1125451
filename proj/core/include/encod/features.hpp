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

// Vertex feature vectors built from the base ensemble.
//
// For every base community C_i the distance of v is AF_i(v) = 1 - INV(v, C_i)
// when v is a member and 1 otherwise. With D_v = max_i AF_i(v) and xi the
// number of base communities, the feature entries are
//
//   F_v(i) = (D_v - AF_i(v) + 1) / (xi * D_v + xi - sum_k AF_k(v)),
//
// which sum to one and are strictly positive.

#ifndef ENCOD_FEATURES_HPP_
#define ENCOD_FEATURES_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "encod/graph.hpp"
#include "encod/partition.hpp"

namespace encod {

enum class InvolvementKind { kCloseness, kPermanence, kBinary };

InvolvementKind parse_involvement(std::string_view name);
std::string involvement_name(InvolvementKind kind);

// Permanence of v in community c of `partition`, before rescaling:
//   I(v) / (D(v) * E_max(v)) - (1 - c_in(v))
// with E_max(v) the largest number of v's neighbors in any single other
// community of the same partition (taken as 1 when v has no external
// neighbor). Isolated vertices score 0. Lies in [-1, 1].
double raw_permanence(const Graph& graph, VertexId v,
                      const DisjointPartition& partition, CommunityId c);

// Involvement of v in community c of `partition`, clamped to [0, 1]:
//   closeness  |C| / sum_{u in C} dist_{G[C]}(u, v); unreachable members
//              count as distance |C|, a singleton scores 1
//   permanence (raw_permanence + 1) / 2
//   binary     1
// Throws DomainError if v is not a member of c.
double involvement(const Graph& graph, VertexId v,
                   const DisjointPartition& partition, CommunityId c,
                   InvolvementKind kind);

// Row-major dense matrix of per-vertex probability vectors.
class FeatureMatrix {
 public:
  enum class Mode { kEnsemble, kExplicit };

  FeatureMatrix() = default;
  FeatureMatrix(std::size_t rows, std::size_t dim, Mode mode)
      : rows_(rows), dim_(dim), mode_(mode), data_(rows * dim, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t dim() const { return dim_; }
  Mode mode() const { return mode_; }

  std::span<const double> row(VertexId v) const {
    return {data_.data() + static_cast<std::size_t>(v) * dim_, dim_};
  }
  std::span<double> row(VertexId v) {
    return {data_.data() + static_cast<std::size_t>(v) * dim_, dim_};
  }

  friend bool operator==(const FeatureMatrix&, const FeatureMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t dim_ = 0;
  Mode mode_ = Mode::kEnsemble;
  std::vector<double> data_;
};

// Feature extraction over the whole ensemble. Columns follow the ensemble
// order (partition-major, then community index). Rows are computed on
// `threads` workers with identical results for any worker count. Throws
// EmptyEnsembleError when the ensemble has no communities.
FeatureMatrix extract_features(const BaseEnsemble& ensemble,
                               const Graph& graph, InvolvementKind kind,
                               std::size_t threads = 1);

// Reads `<label> <v1> ... <vd>` rows and L1-normalizes each one. Rows that
// already sum to exactly 1 are kept bit-for-bit.
FeatureMatrix ingest_vertex_features(std::string_view text,
                                     const Graph& graph);

std::string write_features(const Graph& graph, const FeatureMatrix& features);

}  // namespace encod

#endif  // ENCOD_FEATURES_HPP_
