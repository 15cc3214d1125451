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

// Likelihood maximization over overlapping covers.
//
// Each community j carries a threshold tau_j, the smallest average
// similarity SIM'(OC_j, v) of any member. For a vertex pair with feature
// similarity s and lambda = max_j tau_j,
//
//   beta1 = sum over communities holding both of 1 / (s - tau_j + lambda)
//   beta2 = the same sum over every other community
//   phi   = beta1^2 - beta2^2,    P(edge) = e^phi / (1 + e^phi)
//
// and the log likelihood of the graph is
//
//   l = sum_{(u,v) in E} phi(u,v) - sum_{u<v} log(1 + e^phi(u,v)).

#ifndef ENCOD_OPTIMIZER_HPP_
#define ENCOD_OPTIMIZER_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "encod/cover.hpp"
#include "encod/features.hpp"
#include "encod/graph.hpp"
#include "encod/rng.hpp"
#include "encod/similarity.hpp"

namespace encod {

// Floor applied to every (s - tau_j + lambda) term before inversion.
inline constexpr double kDenominatorFloor = 1e-9;

struct EncodConfig {
  double tau_l = 0.20;
  SimilarityKind similarity = SimilarityKind::kCosine;
  // Iterations without improvement before stopping; 0 means |V|.
  std::size_t patience = 0;
  // Hard iteration cap; 0 means kDefaultIterationFactor * |V|.
  std::size_t max_iterations = 0;
  std::uint64_t seed = 42;
  // When non-zero, the pair sum of the likelihood is estimated from this
  // many uniformly sampled vertex pairs (fixed for the whole run).
  std::size_t pair_samples = 0;
  std::size_t threads = 1;

  static constexpr std::size_t kDefaultIterationFactor = 4;

  // Throws ConfigError naming the offending field.
  void validate() const;
  std::size_t effective_patience(std::size_t n) const;
  std::size_t effective_max_iterations(std::size_t n) const;
};

// Average similarity of v to the members of `community`, v itself included
// when it is a member.
double sim_vertex_community(std::span<const VertexId> community, VertexId v,
                            const SimilarityTable& sim);

struct MembershipTerms {
  double beta1 = 0.0;
  double beta2 = 0.0;
};

// beta1 and beta2 for the pair (u, v) by direct enumeration of the cover.
MembershipTerms membership_terms(VertexId u, VertexId v,
                                 const OverlapCover& cover, double s,
                                 double lambda);

// exp(beta1^2 - beta2^2).
double membership_similarity(VertexId u, VertexId v, const OverlapCover& cover,
                             double s, double lambda);

// beta / (1 + beta).
double edge_probability(double beta);

// log(1 + e^x) without overflow.
double softplus(double x);

// Exact likelihood over all unordered distinct pairs. Rows are evaluated on
// `threads` workers and reduced in row order, so the value does not depend
// on the worker count.
double log_likelihood(const Graph& graph, const OverlapCover& cover,
                      const SimilarityTable& sim, std::size_t threads = 1);
double log_likelihood(const Graph& graph, const OverlapCover& cover,
                      const FeatureMatrix& features,
                      const EncodConfig& config);

// Uniform sample of unordered distinct pairs, drawn with replacement.
struct PairSample {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  double scale = 1.0;  // total pair count / sample size
};
PairSample sample_pairs(std::size_t n, std::size_t count, std::uint64_t seed);

// Edge term exact, pair term estimated from `sample`.
double estimate_log_likelihood(const Graph& graph, const OverlapCover& cover,
                               const SimilarityTable& sim,
                               const PairSample& sample);

// ceil((p + s1) / s1), the number of communities a vertex with s1
// memberships joins or leaves for a draw p. Requires s1 > 0.
std::size_t manipulation_count(std::size_t p, std::size_t s1);

// One random membership perturbation. Every vertex v in id order, with S1
// its communities in `cover` and S2 the rest, joins
// AC = ceil((p1 + |S1|) / |S1|) random communities of S2 (p1 uniform in
// [1, |S2|)) and leaves RC = ceil((p2 + |S1|) / |S1|) random communities of
// S1 (p2 uniform in [1, |S1|)). AC is 0 when |S2| <= 1 and RC is 0 when
// |S1| == 1. A removal is skipped when it would empty the community or
// leave v without any community. Thresholds are carried over unchanged.
OverlapCover manipulate(const OverlapCover& cover, Rng& rng);

// Sets tau_j to the smallest SIM'(OC_j, v) over members, splits every
// community with tau_j < tau_l into singletons of threshold 1 and drops
// repeated communities (first occurrence kept).
OverlapCover update_thresholds(const OverlapCover& cover,
                               const SimilarityTable& sim, double tau_l);

struct RunResult {
  OverlapCover cover;
  double log_likelihood = 0.0;
  std::size_t iterations = 0;
  std::size_t accepted = 0;
  // Likelihood of the start cover followed by every accepted proposal.
  std::vector<double> trace;
};

// Starts from singletons with threshold 1 and repeatedly proposes
// update_thresholds(manipulate(cover)). A proposal whose likelihood is at
// least the best so far replaces the current cover. The stall counter is
// reset only by a strict improvement, and the loop stops once it reaches the
// patience or after max_iterations proposals.
RunResult run(const Graph& graph, const FeatureMatrix& features,
              const EncodConfig& config);
RunResult run(const Graph& graph, const SimilarityTable& sim,
              const EncodConfig& config);

}  // namespace encod

#endif  // ENCOD_OPTIMIZER_HPP_
