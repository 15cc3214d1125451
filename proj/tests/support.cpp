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

#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#ifndef ENCOD_TEST_DATA_DIR
#define ENCOD_TEST_DATA_DIR "tests/data"
#endif

namespace encod::testing {

std::string data_path(const std::string& relative) {
  return std::string(ENCOD_TEST_DATA_DIR) + "/" + relative;
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(gen)) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

DisjointPartition random_partition(std::size_t n, std::size_t groups,
                                   std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, groups - 1);
  std::vector<std::uint64_t> label(n);
  for (auto& l : label) l = pick(gen);
  return DisjointPartition::from_labels(label, "random", seed);
}

OverlapCover random_cover(std::size_t n, std::size_t count, std::uint64_t seed,
                          bool random_thresholds, double tau_low) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::size_t> which(0, count - 1);
  std::bernoulli_distribution join(0.3);
  std::vector<std::vector<VertexId>> communities(count);
  for (VertexId v = 0; v < n; ++v) {
    communities[which(gen)].push_back(v);
    for (std::size_t j = 0; j < count; ++j) {
      if (join(gen)) communities[j].push_back(v);
    }
  }
  std::erase_if(communities, [](const auto& c) { return c.empty(); });
  std::vector<double> thresholds(communities.size(), 1.0);
  if (random_thresholds) {
    std::uniform_real_distribution<double> tau(tau_low, 1.0);
    for (auto& t : thresholds) t = tau(gen);
  }
  return OverlapCover(n, std::move(communities), std::move(thresholds));
}

FeatureMatrix random_features(std::size_t n, std::size_t dim,
                              std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> value(0.05, 1.0);
  FeatureMatrix f(n, dim, FeatureMatrix::Mode::kExplicit);
  for (VertexId v = 0; v < n; ++v) {
    double sum = 0.0;
    for (auto& x : f.row(v)) sum += (x = value(gen));
    for (auto& x : f.row(v)) x /= sum;
  }
  return f;
}

Matrix adjacency_matrix(const Graph& graph) {
  const std::size_t n = graph.num_vertices();
  Matrix a(n, std::vector<int>(n, 0));
  for (const Edge& e : graph.edges()) {
    a[e.u][e.v] = 1;
    a[e.v][e.u] = 1;
  }
  return a;
}

Matrix floyd_warshall(const Matrix& adjacency,
                      const std::vector<bool>& members) {
  const std::size_t n = adjacency.size();
  const int inf = 1 << 28;
  Matrix d(n, std::vector<int>(n, inf));
  for (std::size_t i = 0; i < n; ++i) {
    if (!members[i]) continue;
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (members[j] && adjacency[i][j]) d[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  for (auto& row : d) {
    for (auto& x : row) {
      if (x >= inf) x = -1;
    }
  }
  return d;
}

double brute_clustering(const Matrix& adjacency, std::size_t v,
                        const std::vector<bool>& members) {
  std::vector<std::size_t> nb;
  for (std::size_t u = 0; u < adjacency.size(); ++u) {
    if (members[u] && adjacency[v][u]) nb.push_back(u);
  }
  if (nb.size() < 2) return 0.0;
  std::size_t linked = 0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < nb.size(); ++i) {
    for (std::size_t j = i + 1; j < nb.size(); ++j) {
      ++pairs;
      linked += adjacency[nb[i]][nb[j]];
    }
  }
  return static_cast<double>(linked) / static_cast<double>(pairs);
}

double brute_modularity(const Matrix& adjacency,
                        const std::vector<std::size_t>& label) {
  const std::size_t n = adjacency.size();
  double m = 0.0;
  std::vector<double> degree(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) degree[i] += adjacency[i][j];
    m += degree[i];
  }
  m /= 2.0;
  if (m == 0.0) return 0.0;
  // Newman's pairwise form: (1/2m) sum_ij [A_ij - k_i k_j / 2m] delta(c_i, c_j).
  long double q = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (label[i] != label[j]) continue;
      q += adjacency[i][j] - degree[i] * degree[j] / (2.0L * m);
    }
  }
  return static_cast<double>(q / (2.0L * m));
}

double brute_permanence(const Matrix& adjacency,
                        const std::vector<std::size_t>& label, std::size_t v) {
  const std::size_t n = adjacency.size();
  std::size_t degree = 0;
  std::size_t internal = 0;
  std::map<std::size_t, std::size_t> external;
  std::vector<std::size_t> inside;
  for (std::size_t u = 0; u < n; ++u) {
    if (!adjacency[v][u]) continue;
    ++degree;
    if (label[u] == label[v]) {
      ++internal;
      inside.push_back(u);
    } else {
      ++external[label[u]];
    }
  }
  double raw = 0.0;
  if (degree > 0) {
    std::size_t e_max = 0;
    for (const auto& [c, count] : external) e_max = std::max(e_max, count);
    if (e_max == 0) e_max = 1;
    double c_in = 0.0;
    if (inside.size() >= 2) {
      std::size_t links = 0;
      for (std::size_t a : inside) {
        for (std::size_t b : inside) {
          if (a < b && adjacency[a][b]) ++links;
        }
      }
      c_in = 2.0 * static_cast<double>(links) /
             (static_cast<double>(inside.size()) * (inside.size() - 1.0));
    }
    raw = static_cast<double>(internal) /
              (static_cast<double>(degree) * static_cast<double>(e_max)) -
          (1.0 - c_in);
  }
  return (raw + 1.0) / 2.0;
}

namespace {

long double cosine(std::span<const double> a, std::span<const double> b) {
  long double ab = 0.0L;
  long double aa = 0.0L;
  long double bb = 0.0L;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ab += static_cast<long double>(a[i]) * b[i];
    aa += static_cast<long double>(a[i]) * a[i];
    bb += static_cast<long double>(b[i]) * b[i];
  }
  return ab / std::sqrt(aa * bb);
}

}  // namespace

double brute_log_likelihood(const Matrix& adjacency,
                            const std::vector<std::set<std::size_t>>& cover,
                            const std::vector<double>& thresholds,
                            const FeatureMatrix& features) {
  const std::size_t n = adjacency.size();
  long double lambda = 0.0L;
  for (double t : thresholds) lambda = std::max<long double>(lambda, t);
  long double mantissa = 1.0L;
  long long exponent = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const long double s = cosine(features.row(static_cast<VertexId>(u)),
                                   features.row(static_cast<VertexId>(v)));
      long double b1 = 0.0L;
      long double b2 = 0.0L;
      for (std::size_t j = 0; j < cover.size(); ++j) {
        const long double w =
            1.0L / std::max(s - thresholds[j] + lambda, 1e-9L);
        if (cover[j].count(u) && cover[j].count(v)) {
          b1 += w;
        } else {
          b2 += w;
        }
      }
      const long double beta = std::exp(b1 * b1 - b2 * b2);
      // P(edge) = beta / (1 + beta) and P(no edge) = 1 / (1 + beta).
      const long double p =
          adjacency[u][v] ? beta / (1.0L + beta) : 1.0L / (1.0L + beta);
      int e = 0;
      mantissa = std::frexp(mantissa * p, &e);
      exponent += e;
    }
  }
  return static_cast<double>(std::log(mantissa) +
                             static_cast<long double>(exponent) *
                                 std::log(2.0L));
}

std::vector<std::set<std::size_t>> as_sets(const OverlapCover& cover) {
  std::vector<std::set<std::size_t>> out;
  for (const auto& c : cover.communities()) out.emplace_back(c.begin(), c.end());
  return out;
}

double brute_omega(const std::vector<std::set<std::size_t>>& a,
                   const std::vector<std::set<std::size_t>>& b,
                   std::size_t n) {
  if (n < 2) return 1.0;
  auto shared = [](const std::vector<std::set<std::size_t>>& cover,
                   std::size_t u, std::size_t v) {
    std::size_t count = 0;
    for (const auto& c : cover) count += c.count(u) && c.count(v);
    return count;
  };
  std::size_t agree = 0;
  std::size_t pairs = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      ++pairs;
      agree += shared(a, u, v) == shared(b, u, v);
    }
  }
  return static_cast<double>(agree) / static_cast<double>(pairs);
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  auto ranks = [](const std::vector<double>& values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> r(values.size());
    for (std::size_t i = 0; i < order.size();) {
      std::size_t j = i;
      while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
      const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0;
      for (std::size_t k = i; k <= j; ++k) r[order[k]] = avg;
      i = j + 1;
    }
    return r;
  };
  const auto rx = ranks(x);
  const auto ry = ranks(y);
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / rx.size();
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / ry.size();
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace encod::testing
