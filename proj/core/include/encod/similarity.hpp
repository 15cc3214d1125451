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

#ifndef ENCOD_SIMILARITY_HPP_
#define ENCOD_SIMILARITY_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "encod/features.hpp"
#include "encod/graph.hpp"

namespace encod {

enum class SimilarityKind { kCosine, kPearson };

SimilarityKind parse_similarity(std::string_view name);
std::string similarity_name(SimilarityKind kind);

// Similarity of two feature vectors on a [0, 1] scale.
//   cosine   dot(u, v) / (|u| |v|), clamped to [0, 1]
//   pearson  (r + 1) / 2 with r the Pearson correlation; a constant vector
//            has no defined correlation and is treated as r = 0
// Throws DegenerateError for an all-zero vector and DomainError when the
// dimensions differ.
double similarity(std::span<const double> u, std::span<const double> v,
                  SimilarityKind kind);

// Pairwise vertex similarities for one feature matrix. The self-similarity
// of a vertex is exactly 1. Small instances are tabulated densely; above
// kDenseLimit vertices the values are computed on demand from the
// preprocessed rows, which gives the same numbers.
class SimilarityTable {
 public:
  static constexpr std::size_t kDenseLimit = 4096;

  SimilarityTable(const FeatureMatrix& features, SimilarityKind kind,
                  std::size_t threads = 1);

  std::size_t size() const { return n_; }
  SimilarityKind kind() const { return kind_; }

  double operator()(VertexId u, VertexId v) const {
    if (u == v) return 1.0;
    if (!dense_.empty()) return dense_[static_cast<std::size_t>(u) * n_ + v];
    return compute(u, v);
  }

 private:
  double compute(VertexId u, VertexId v) const;

  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  SimilarityKind kind_;
  std::vector<double> rows_;     // centered for pearson
  std::vector<double> squares_;  // squared norm per row
  std::vector<double> dense_;
};

}  // namespace encod

#endif  // ENCOD_SIMILARITY_HPP_
