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

#include "encod/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "encod/errors.hpp"
#include "encod/parallel.hpp"

namespace encod {

namespace {

constexpr std::uint64_t kManipulateStream = 0x6d616e6970;
constexpr std::uint64_t kPairSampleStream = 0x7061697273;

// Per-evaluation constants. The sum over every community only depends on s
// through the distinct thresholds, so those are grouped with their counts.
class PairTerms {
 public:
  explicit PairTerms(const OverlapCover& cover)
      : cover_(cover), lambda_(cover.max_threshold()) {
    std::map<double, double> counts;
    for (double t : cover.thresholds()) counts[t] += 1.0;
    groups_.assign(counts.begin(), counts.end());
  }

  double weight(double s, double tau) const {
    return 1.0 / std::max(s - tau + lambda_, kDenominatorFloor);
  }

  double total(double s) const {
    double sum = 0.0;
    for (const auto& [tau, count] : groups_) sum += count * weight(s, tau);
    return sum;
  }

  double phi_from_shared(double s, double beta1) const {
    const double beta2 = total(s) - beta1;
    return beta1 * beta1 - beta2 * beta2;
  }

  // phi for one pair via the intersection of the sorted membership lists.
  double phi(VertexId u, VertexId v, double s) const {
    const auto a = cover_.memberships(u);
    const auto b = cover_.memberships(v);
    double beta1 = 0.0;
    std::size_t i = 0;
    std::size_t k = 0;
    while (i < a.size() && k < b.size()) {
      if (a[i] < b[k]) {
        ++i;
      } else if (b[k] < a[i]) {
        ++k;
      } else {
        beta1 += weight(s, cover_.threshold(a[i]));
        ++i;
        ++k;
      }
    }
    return phi_from_shared(s, beta1);
  }

 private:
  const OverlapCover& cover_;
  double lambda_;
  std::vector<std::pair<double, double>> groups_;
};

// Contribution of every pair (u, v) with v > u.
double row_value(VertexId u, const Graph& graph, const OverlapCover& cover,
                 const SimilarityTable& sim, const PairTerms& terms) {
  const std::size_t n = graph.num_vertices();
  thread_local std::vector<double> shared;
  thread_local std::vector<char> adjacent;
  shared.assign(n, 0.0);
  adjacent.assign(n, 0);
  for (VertexId v : graph.neighbors(u)) adjacent[v] = 1;
  for (std::uint32_t j : cover.memberships(u)) {
    const auto members = cover.community(j);
    const double tau = cover.threshold(j);
    for (auto it = std::upper_bound(members.begin(), members.end(), u);
         it != members.end(); ++it) {
      shared[*it] += terms.weight(sim(u, *it), tau);
    }
  }
  double sum = 0.0;
  for (VertexId v = u + 1; v < n; ++v) {
    const double phi = terms.phi_from_shared(sim(u, v), shared[v]);
    if (adjacent[v]) sum += phi;
    sum -= softplus(phi);
  }
  return sum;
}

}  // namespace

void EncodConfig::validate() const {
  if (!(tau_l > 0.0 && tau_l < 1.0)) {
    throw ConfigError("tau-l must lie strictly between 0 and 1");
  }
}

std::size_t EncodConfig::effective_patience(std::size_t n) const {
  return patience > 0 ? patience : std::max<std::size_t>(n, 1);
}

std::size_t EncodConfig::effective_max_iterations(std::size_t n) const {
  return max_iterations > 0
             ? max_iterations
             : kDefaultIterationFactor * std::max<std::size_t>(n, 1);
}

double sim_vertex_community(std::span<const VertexId> community, VertexId v,
                            const SimilarityTable& sim) {
  double sum = 0.0;
  for (VertexId u : community) sum += sim(u, v);
  return sum / static_cast<double>(community.size());
}

MembershipTerms membership_terms(VertexId u, VertexId v,
                                 const OverlapCover& cover, double s,
                                 double lambda) {
  MembershipTerms terms;
  for (std::size_t j = 0; j < cover.size(); ++j) {
    const double w =
        1.0 / std::max(s - cover.threshold(j) + lambda, kDenominatorFloor);
    if (cover.contains(j, u) && cover.contains(j, v)) {
      terms.beta1 += w;
    } else {
      terms.beta2 += w;
    }
  }
  return terms;
}

double membership_similarity(VertexId u, VertexId v, const OverlapCover& cover,
                             double s, double lambda) {
  const auto t = membership_terms(u, v, cover, s, lambda);
  return std::exp(t.beta1 * t.beta1 - t.beta2 * t.beta2);
}

double edge_probability(double beta) {
  if (std::isinf(beta)) return 1.0;
  return beta / (1.0 + beta);
}

double softplus(double x) {
  return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x)));
}

double log_likelihood(const Graph& graph, const OverlapCover& cover,
                      const SimilarityTable& sim, std::size_t threads) {
  const std::size_t n = graph.num_vertices();
  if (sim.size() != n || cover.num_vertices() != n) {
    throw DomainError("likelihood: graph, cover and features disagree on |V|");
  }
  const PairTerms terms(cover);
  std::vector<double> rows(n, 0.0);
  parallel_for(n, threads, [&](std::size_t u) {
    rows[u] = row_value(static_cast<VertexId>(u), graph, cover, sim, terms);
  });
  double total = 0.0;
  for (double r : rows) total += r;
  return total;
}

double log_likelihood(const Graph& graph, const OverlapCover& cover,
                      const FeatureMatrix& features,
                      const EncodConfig& config) {
  const SimilarityTable sim(features, config.similarity, config.threads);
  return log_likelihood(graph, cover, sim, config.threads);
}

PairSample sample_pairs(std::size_t n, std::size_t count, std::uint64_t seed) {
  PairSample sample;
  if (n < 2 || count == 0) return sample;
  Rng rng(seed);
  sample.pairs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto u = static_cast<VertexId>(rng.uniform_index(n));
    auto v = static_cast<VertexId>(rng.uniform_index(n - 1));
    if (v >= u) ++v;
    sample.pairs.emplace_back(std::min(u, v), std::max(u, v));
  }
  const double total_pairs =
      static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  sample.scale = total_pairs / static_cast<double>(count);
  return sample;
}

double estimate_log_likelihood(const Graph& graph, const OverlapCover& cover,
                               const SimilarityTable& sim,
                               const PairSample& sample) {
  const PairTerms terms(cover);
  double edges = 0.0;
  for (const Edge& e : graph.edges()) edges += terms.phi(e.u, e.v, sim(e.u, e.v));
  double pairs = 0.0;
  for (const auto& [u, v] : sample.pairs) {
    pairs += softplus(terms.phi(u, v, sim(u, v)));
  }
  return edges - sample.scale * pairs;
}

std::size_t manipulation_count(std::size_t p, std::size_t s1) {
  return (p + s1 + s1 - 1) / s1;
}

OverlapCover manipulate(const OverlapCover& cover, Rng& rng) {
  const std::size_t n = cover.num_vertices();
  const std::size_t count = cover.size();
  std::vector<std::size_t> size(count);
  for (std::size_t j = 0; j < count; ++j) size[j] = cover.community(j).size();
  std::vector<std::vector<VertexId>> added(count);
  std::vector<std::vector<VertexId>> removed(count);

  std::vector<std::uint32_t> s1;
  std::vector<std::uint32_t> s2;
  for (VertexId v = 0; v < n; ++v) {
    const auto own = cover.memberships(v);
    s1.assign(own.begin(), own.end());
    s2.clear();
    for (std::uint32_t j = 0, k = 0; j < count; ++j) {
      if (k < own.size() && own[k] == j) {
        ++k;
      } else {
        s2.push_back(j);
      }
    }
    const std::size_t n1 = s1.size();
    const std::size_t n2 = s2.size();

    std::size_t add = 0;
    if (n2 > 1 && n1 > 0) {
      const std::size_t p1 = rng.uniform_int(1, n2);
      add = std::min(n2, manipulation_count(p1, n1));
    }
    std::size_t remove = 0;
    if (n1 > 1) {
      const std::size_t p2 = rng.uniform_int(1, n1);
      remove = std::min(n1, manipulation_count(p2, n1));
    }

    rng.sample_front(std::span<std::uint32_t>(s2), add);
    for (std::size_t i = 0; i < add; ++i) {
      added[s2[i]].push_back(v);
      ++size[s2[i]];
    }
    std::size_t held = n1 + add;
    rng.sample_front(std::span<std::uint32_t>(s1), remove);
    for (std::size_t i = 0; i < remove; ++i) {
      const std::uint32_t j = s1[i];
      if (size[j] <= 1 || held <= 1) continue;
      removed[j].push_back(v);
      --size[j];
      --held;
    }
  }

  std::vector<std::vector<VertexId>> communities(count);
  for (std::size_t j = 0; j < count; ++j) {
    auto& out = communities[j];
    for (VertexId v : cover.community(j)) {
      if (!std::binary_search(removed[j].begin(), removed[j].end(), v)) {
        out.push_back(v);
      }
    }
    out.insert(out.end(), added[j].begin(), added[j].end());
  }
  std::vector<double> thresholds(cover.thresholds().begin(),
                                 cover.thresholds().end());
  return OverlapCover(n, std::move(communities), std::move(thresholds));
}

OverlapCover update_thresholds(const OverlapCover& cover,
                               const SimilarityTable& sim, double tau_l) {
  std::vector<std::vector<VertexId>> communities;
  std::vector<double> thresholds;
  std::map<std::vector<VertexId>, bool> seen;
  auto keep = [&](std::vector<VertexId> members, double tau) {
    if (seen.emplace(members, true).second) {
      communities.push_back(std::move(members));
      thresholds.push_back(tau);
    }
  };
  for (std::size_t j = 0; j < cover.size(); ++j) {
    const auto members = cover.community(j);
    if (members.empty()) continue;
    double tau = 1.0;
    for (VertexId v : members) {
      tau = std::min(tau, sim_vertex_community(members, v, sim));
    }
    if (tau < tau_l) {
      for (VertexId v : members) keep({v}, 1.0);
    } else {
      keep({members.begin(), members.end()}, tau);
    }
  }
  return OverlapCover(cover.num_vertices(), std::move(communities),
                      std::move(thresholds));
}

RunResult run(const Graph& graph, const FeatureMatrix& features,
              const EncodConfig& config) {
  config.validate();
  if (features.rows() != graph.num_vertices()) {
    throw DomainError("features do not cover the graph's vertex set");
  }
  const SimilarityTable sim(features, config.similarity, config.threads);
  return run(graph, sim, config);
}

RunResult run(const Graph& graph, const SimilarityTable& sim,
              const EncodConfig& config) {
  config.validate();
  const std::size_t n = graph.num_vertices();
  RunResult result;
  result.cover = OverlapCover::singletons(n);

  const bool sampled =
      config.pair_samples > 0 && n >= 2 &&
      static_cast<double>(config.pair_samples) <
          static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  const PairSample sample =
      sampled ? sample_pairs(n, config.pair_samples,
                             derive_seed(config.seed, kPairSampleStream))
              : PairSample{};
  auto evaluate = [&](const OverlapCover& cover) {
    return sampled ? estimate_log_likelihood(graph, cover, sim, sample)
                   : log_likelihood(graph, cover, sim, config.threads);
  };

  result.log_likelihood = evaluate(result.cover);
  result.trace.push_back(result.log_likelihood);
  if (n <= 1) return result;

  Rng rng(derive_seed(config.seed, kManipulateStream));
  const std::size_t patience = config.effective_patience(n);
  const std::size_t max_iterations = config.effective_max_iterations(n);
  std::size_t stall = 0;
  while (stall < patience && result.iterations < max_iterations) {
    ++result.iterations;
    OverlapCover proposal =
        update_thresholds(manipulate(result.cover, rng), sim, config.tau_l);
    const double l = evaluate(proposal);
    if (l >= result.log_likelihood) {
      stall = l > result.log_likelihood ? 0 : stall + 1;
      result.log_likelihood = l;
      result.cover = std::move(proposal);
      result.trace.push_back(l);
      ++result.accepted;
    } else {
      ++stall;
    }
  }
  return result;
}

}  // namespace encod
