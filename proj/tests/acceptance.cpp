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

// End-to-end acceptance checks. Each criterion prints exactly one line
//
//   criterion <n>: PASS|FAIL <measurements> (<seconds>s of <budget>s)
//
// and the process exits non-zero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "encod/cover.hpp"
#include "encod/features.hpp"
#include "encod/metrics.hpp"
#include "encod/optimizer.hpp"
#include "encod/partitioners.hpp"
#include "encod/similarity.hpp"
#include "encod/synthgen.hpp"
#include "encod/text_io.hpp"
#include "support.hpp"

namespace encod {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", x);
  return buf;
}

constexpr std::uint64_t kBenchmarkSeeds = 5;
constexpr std::size_t kOrderings = 8;

PlantedConfig benchmark_config(std::uint64_t seed) {
  PlantedConfig c;
  c.n = 256;
  c.communities = 8;
  c.community_size = 48;
  c.overlap_fraction = 0.3;
  c.p_in = 0.3;
  c.p_out = 0.01;
  c.seed = seed;
  return c;
}

const std::vector<Algorithm> kAllAlgorithms{Algorithm::kLouvain,
                                            Algorithm::kLabelPropagation,
                                            Algorithm::kGreedyModularity};

// ONMI of the optimized cover and of the best single base partition.
struct RecoveryScore {
  double encod = 0.0;
  double best_base = 0.0;
};

RecoveryScore recover(const PlantedInstance& inst,
                      std::span<const Algorithm> algorithms,
                      std::uint64_t seed) {
  const BaseEnsemble ensemble =
      build_ensemble(inst.graph, algorithms, kOrderings, seed);
  const FeatureMatrix features =
      extract_features(ensemble, inst.graph, InvolvementKind::kPermanence);
  EncodConfig config;
  config.seed = seed;
  const RunResult result = run(inst.graph, features, config);
  RecoveryScore score;
  score.encod = onmi(result.cover, inst.truth);
  for (const auto& p : ensemble.partitions()) {
    score.best_base =
        std::max(score.best_base, onmi(OverlapCover::from_partition(p), inst.truth));
  }
  return score;
}

// 1. Every extracted feature row sums to one with positive entries.
Outcome feature_normalization() {
  std::mt19937_64 gen(101);
  double worst_sum = 0.0;
  double min_entry = 1.0;
  const InvolvementKind kinds[] = {InvolvementKind::kPermanence,
                                   InvolvementKind::kCloseness,
                                   InvolvementKind::kBinary};
  for (std::uint64_t i = 0; i < 50; ++i) {
    PlantedConfig c;
    c.n = std::uniform_int_distribution<std::size_t>(20, 200)(gen);
    c.communities = std::uniform_int_distribution<std::size_t>(2, 8)(gen);
    c.community_size = (c.n + c.communities - 1) / c.communities + 4;
    c.overlap_fraction = std::uniform_real_distribution<double>(0.0, 0.4)(gen);
    c.p_in = 0.3;
    c.p_out = 0.02;
    c.seed = i;
    const PlantedInstance inst = generate_planted(c);
    const BaseEnsemble e = build_ensemble(inst.graph, kAllAlgorithms, 4, i);
    const FeatureMatrix f = extract_features(e, inst.graph, kinds[i % 3]);
    for (VertexId v = 0; v < f.rows(); ++v) {
      const auto row = f.row(v);
      worst_sum = std::max(
          worst_sum, std::abs(std::accumulate(row.begin(), row.end(), 0.0) - 1.0));
      min_entry = std::min(min_entry, *std::min_element(row.begin(), row.end()));
    }
  }
  return {worst_sum < 1e-9 && min_entry > 0.0,
          "max|sum-1|=" + fmt(worst_sum) + " min_entry=" + fmt(min_entry)};
}

// 2. Likelihood agrees with the product-form pair enumeration.
Outcome likelihood_oracle() {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const std::size_t n = 2 + i % 29;
    const Graph g = testing::random_graph(n, 0.1 + 0.005 * (i % 60), i);
    const OverlapCover cover =
        testing::random_cover(n, 1 + i % 7, i + 1000, true);
    const FeatureMatrix f = testing::random_features(n, 2 + i % 6, i + 2000);
    const double expected = testing::brute_log_likelihood(
        testing::adjacency_matrix(g), testing::as_sets(cover),
        {cover.thresholds().begin(), cover.thresholds().end()}, f);
    const double got =
        log_likelihood(g, cover, SimilarityTable(f, SimilarityKind::kCosine));
    worst = std::max(worst,
                     std::abs(got - expected) / std::max(1.0, std::abs(expected)));
  }
  return {worst <= 1e-9, "max_rel_err=" + fmt(worst)};
}

// 3. Accepted likelihoods never decrease, and the final cover is valid with
// every member at or above its community threshold.
Outcome monotone_acceptance() {
  std::size_t decreases = 0;
  std::size_t invalid = 0;
  std::size_t threshold_violations = 0;
  std::size_t accepted = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    PlantedConfig c;
    c.n = 128;
    c.communities = 4;
    c.community_size = 40;
    c.seed = seed;
    const PlantedInstance inst = generate_planted(c);
    const BaseEnsemble e = build_ensemble(inst.graph, kAllAlgorithms, 4, seed);
    const FeatureMatrix f =
        extract_features(e, inst.graph, InvolvementKind::kPermanence);
    EncodConfig config;
    config.seed = seed;
    const SimilarityTable sim(f, config.similarity);
    const RunResult r = run(inst.graph, sim, config);
    accepted += r.accepted;
    for (std::size_t i = 1; i < r.trace.size(); ++i) {
      decreases += r.trace[i] < r.trace[i - 1];
    }
    invalid += !r.cover.is_valid();
    for (std::size_t j = 0; j < r.cover.size(); ++j) {
      const auto members = r.cover.community(j);
      for (VertexId v : members) {
        threshold_violations +=
            sim_vertex_community(members, v, sim) < r.cover.threshold(j);
      }
    }
  }
  return {decreases == 0 && invalid == 0 && threshold_violations == 0,
          "decreases=" + std::to_string(decreases) +
              " invalid_covers=" + std::to_string(invalid) +
              " threshold_violations=" + std::to_string(threshold_violations) +
              " accepted_total=" + std::to_string(accepted)};
}

// 4. Metric identities, the omega oracle and the ONMI golden values.
Outcome metric_oracles() {
  std::size_t identity_failures = 0;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const OverlapCover a = testing::random_cover(10 + 2 * i, 2 + i % 5, i);
    identity_failures += omega_index(a, a) != 1.0;
    identity_failures += fscore(a, a) != 1.0;
    identity_failures += std::abs(onmi(a, a) - 1.0) > 1e-12;
  }
  std::size_t omega_mismatches = 0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const std::size_t n = 2 + i % 49;
    const OverlapCover a = testing::random_cover(n, 1 + i % 6, i + 300);
    const OverlapCover b = testing::random_cover(n, 1 + i % 4, i + 600);
    omega_mismatches += omega_index(a, b) !=
                        testing::brute_omega(testing::as_sets(a),
                                             testing::as_sets(b), n);
  }
  std::string labels;
  for (int v = 0; v < 50; ++v) labels += std::to_string(v) + "\n";
  const Graph g = load_edge_list(labels);
  std::istringstream golden(read_file(testing::data_path("onmi/golden.txt")));
  std::string line;
  double worst_onmi = 0.0;
  int pairs = 0;
  while (std::getline(golden, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    int pair = 0;
    double expected = 0.0;
    row >> pair >> expected;
    const std::string stem = "onmi/pair" + std::to_string(pair);
    const OverlapCover a =
        ingest_cover(read_file(testing::data_path(stem + "_a.txt")), g);
    const OverlapCover b =
        ingest_cover(read_file(testing::data_path(stem + "_b.txt")), g);
    worst_onmi = std::max(worst_onmi, std::abs(onmi(a, b) - expected));
    ++pairs;
  }
  return {identity_failures == 0 && omega_mismatches == 0 && pairs == 5 &&
              worst_onmi <= 1e-6,
          "identity_failures=" + std::to_string(identity_failures) +
              " omega_mismatches=" + std::to_string(omega_mismatches) +
              " onmi_pairs=" + std::to_string(pairs) +
              " max_onmi_err=" + fmt(worst_onmi)};
}

// 5. Seed-averaged co-occurrence curves rise with the shared fraction.
Outcome cooccurrence_shape() {
  std::vector<double> edge_sum(10, 0.0), shared_sum(10, 0.0), seen(10, 0.0);
  for (std::uint64_t seed = 1; seed <= kBenchmarkSeeds; ++seed) {
    const PlantedInstance inst = generate_planted(benchmark_config(seed));
    const BaseEnsemble e =
        build_ensemble(inst.graph, kAllAlgorithms, kOrderings, seed);
    for (const CurveBin& bin : cooccurrence_curve(inst.graph, e, inst.truth)) {
      const auto b = static_cast<std::size_t>(std::lround(bin.low * 10.0));
      edge_sum[b] += bin.p_edge;
      shared_sum[b] += bin.p_shared;
      seen[b] += 1.0;
    }
  }
  std::vector<double> x, p_edge, p_shared;
  for (std::size_t b = 0; b < 10; ++b) {
    if (seen[b] == 0.0) continue;
    x.push_back(static_cast<double>(b));
    p_edge.push_back(edge_sum[b] / seen[b]);
    p_shared.push_back(shared_sum[b] / seen[b]);
  }
  auto non_decreasing = [](const std::vector<double>& y) {
    return std::is_sorted(y.begin(), y.end());
  };
  const double rho_edge = testing::spearman(x, p_edge);
  const double rho_shared = testing::spearman(x, p_shared);
  std::string curve;
  for (std::size_t i = 0; i < x.size(); ++i) {
    curve += (i ? "," : "") + fmt(p_edge[i]) + "/" + fmt(p_shared[i]);
  }
  return {x.size() >= 2 && non_decreasing(p_edge) && non_decreasing(p_shared) &&
              rho_edge >= 0.8 && rho_shared >= 0.8,
          "bins=" + std::to_string(x.size()) + " rho_edge=" + fmt(rho_edge) +
              " rho_shared=" + fmt(rho_shared) + " curve(edge/shared)=" + curve};
}

// 6. The optimized cover recovers the planted structure.
Outcome recovery() {
  double encod = 0.0;
  double base = 0.0;
  for (std::uint64_t seed = 1; seed <= kBenchmarkSeeds; ++seed) {
    const RecoveryScore s =
        recover(generate_planted(benchmark_config(seed)), kAllAlgorithms, seed);
    encod += s.encod;
    base += s.best_base;
  }
  encod /= kBenchmarkSeeds;
  base /= kBenchmarkSeeds;
  return {encod >= 0.5 && encod >= base - 0.05,
          "mean_onmi=" + fmt(encod) + " mean_best_base_onmi=" + fmt(base)};
}

// 7. Using every base algorithm is not worse than using any one of them.
Outcome ablation() {
  std::vector<std::vector<Algorithm>> configs{kAllAlgorithms};
  for (Algorithm a : kAllAlgorithms) configs.push_back({a});
  std::vector<double> mean(configs.size(), 0.0);
  for (std::uint64_t seed = 1; seed <= kBenchmarkSeeds; ++seed) {
    const PlantedInstance inst = generate_planted(benchmark_config(seed));
    for (std::size_t i = 0; i < configs.size(); ++i) {
      mean[i] += recover(inst, configs[i], seed).encod / kBenchmarkSeeds;
    }
  }
  bool pass = true;
  std::string detail = "all=" + fmt(mean[0]);
  for (std::size_t i = 1; i < configs.size(); ++i) {
    pass = pass && mean[0] >= mean[i] - 0.05;
    detail += " " + algorithm_name(configs[i][0]) + "=" + fmt(mean[i]);
  }
  return {pass, detail};
}

// 8. Two identical pipeline invocations of the installed tool agree byte
// for byte.
Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "encod_acceptance_c8";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string tool = ENCOD_CLI_PATH;
  auto sh = [](const std::string& cmd) { return std::system(cmd.c_str()); };
  const std::string graph = (dir / "g.txt").string();
  int status = sh(tool + " gen --n 128 --c 4 --size 40 --seed 8 -o " + graph +
                  " --truth " + (dir / "truth.txt").string() + " > /dev/null");
  for (const char* name : {"a.txt", "b.txt"}) {
    status |= sh(tool + " pipeline --graph " + graph + " --seed 8 -o " +
                 (dir / name).string() + " > /dev/null");
  }
  bool same = status == 0;
  for (const char* suffix : {"", ".manifest", ".thresholds"}) {
    same = same && read_file((dir / "a.txt").string() + suffix) ==
                       read_file((dir / "b.txt").string() + suffix);
  }
  fs::remove_all(dir);
  return {same, std::string("exit_status=") + std::to_string(status) +
                    " identical=" + (same ? "yes" : "no")};
}

// 9. Permanence matches term counting.
Outcome permanence_oracle() {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const Graph g = testing::random_graph(10, 0.2 + 0.01 * (i % 40), i);
    const DisjointPartition p = testing::random_partition(10, 2 + i % 3, i + 77);
    std::vector<std::size_t> label(p.assignment().begin(), p.assignment().end());
    const auto a = testing::adjacency_matrix(g);
    for (VertexId v = 0; v < 10; ++v) {
      const double got = involvement(g, v, p, p.community_of(v),
                                     InvolvementKind::kPermanence);
      worst = std::max(worst, std::abs(got - testing::brute_permanence(a, label, v)));
    }
  }
  return {worst <= 1e-12, "max_abs_err=" + fmt(worst)};
}

struct Criterion {
  int id;
  double budget_seconds;
  std::function<Outcome()> check;
};

}  // namespace
}  // namespace encod

int main(int argc, char** argv) {
  using namespace encod;
  const std::vector<Criterion> all{
      {1, 30, feature_normalization}, {2, 60, likelihood_oracle},
      {3, 300, monotone_acceptance},  {4, 30, metric_oracles},
      {5, 180, cooccurrence_shape},   {6, 600, recovery},
      {7, 900, ablation},             {8, 60, determinism},
      {9, 10, permanence_oracle}};

  std::vector<int> selected;
  CLI::App app{"Acceptance checks"};
  app.add_option("--criterion", selected, "Criterion to run (repeatable)")
      ->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  bool ok = true;
  for (const Criterion& c : all) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), c.id) == selected.end()) {
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool pass = outcome.pass && seconds <= c.budget_seconds;
    ok = ok && pass;
    std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << " "
              << outcome.detail << " (" << fmt(seconds) << "s of "
              << c.budget_seconds << "s)" << std::endl;
  }
  return ok ? 0 : 1;
}
