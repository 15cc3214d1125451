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

#include "encod/similarity.hpp"

#include <algorithm>
#include <cmath>

#include "encod/errors.hpp"
#include "encod/parallel.hpp"

namespace encod {

namespace {

double dot(const double* a, const double* b, std::size_t d) {
  double s = 0.0;
  for (std::size_t i = 0; i < d; ++i) s += a[i] * b[i];
  return s;
}

// Shared by the free function and the table so both agree bit-for-bit.
// `squares_*` are dot(x, x) of the (possibly centered) rows.
double finish(SimilarityKind kind, double cross, double square_u,
              double square_v) {
  if (kind == SimilarityKind::kCosine) {
    return std::clamp(cross / std::sqrt(square_u * square_v), 0.0, 1.0);
  }
  if (square_u == 0.0 || square_v == 0.0) return 0.5;
  const double r =
      std::clamp(cross / std::sqrt(square_u * square_v), -1.0, 1.0);
  return (r + 1.0) / 2.0;
}

void prepare(SimilarityKind kind, std::span<const double> in, double* out) {
  bool nonzero = false;
  for (double x : in) nonzero = nonzero || x != 0.0;
  if (!nonzero) throw DegenerateError("similarity of an all-zero vector");
  double mean = 0.0;
  if (kind == SimilarityKind::kPearson) {
    for (double x : in) mean += x;
    mean /= static_cast<double>(in.size());
  }
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = in[i] - mean;
}

}  // namespace

SimilarityKind parse_similarity(std::string_view name) {
  if (name == "cosine") return SimilarityKind::kCosine;
  if (name == "pearson") return SimilarityKind::kPearson;
  throw ConfigError("unknown similarity '" + std::string(name) + "'");
}

std::string similarity_name(SimilarityKind kind) {
  return kind == SimilarityKind::kCosine ? "cosine" : "pearson";
}

double similarity(std::span<const double> u, std::span<const double> v,
                  SimilarityKind kind) {
  if (u.size() != v.size()) {
    throw DomainError("similarity of vectors with different dimensions");
  }
  std::vector<double> a(u.size());
  std::vector<double> b(v.size());
  prepare(kind, u, a.data());
  prepare(kind, v, b.data());
  const std::size_t d = a.size();
  return finish(kind, dot(a.data(), b.data(), d), dot(a.data(), a.data(), d),
                dot(b.data(), b.data(), d));
}

SimilarityTable::SimilarityTable(const FeatureMatrix& features,
                                 SimilarityKind kind, std::size_t threads)
    : n_(features.rows()),
      dim_(features.dim()),
      kind_(kind),
      rows_(n_ * dim_),
      squares_(n_) {
  for (VertexId v = 0; v < n_; ++v) {
    double* row = rows_.data() + static_cast<std::size_t>(v) * dim_;
    prepare(kind, features.row(v), row);
    squares_[v] = dot(row, row, dim_);
  }
  if (n_ > kDenseLimit) return;
  dense_.assign(n_ * n_, 1.0);
  parallel_for(n_, threads, [&](std::size_t u) {
    for (std::size_t v = 0; v < n_; ++v) {
      if (u != v) {
        dense_[u * n_ + v] = compute(static_cast<VertexId>(u),
                                     static_cast<VertexId>(v));
      }
    }
  });
}

double SimilarityTable::compute(VertexId u, VertexId v) const {
  const double* a = rows_.data() + static_cast<std::size_t>(u) * dim_;
  const double* b = rows_.data() + static_cast<std::size_t>(v) * dim_;
  return finish(kind_, dot(a, b, dim_), squares_[u], squares_[v]);
}

}  // namespace encod
