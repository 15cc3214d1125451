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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <utility>

#include "encod/cover.hpp"
#include "encod/errors.hpp"
#include "encod/features.hpp"
#include "encod/graph.hpp"
#include "encod/metrics.hpp"
#include "encod/optimizer.hpp"
#include "encod/parallel.hpp"
#include "encod/partition.hpp"
#include "encod/partitioners.hpp"
#include "encod/synthgen.hpp"
#include "encod/text_io.hpp"

#ifndef ENCOD_VERSION
#define ENCOD_VERSION "0.0.0"
#endif

namespace encod::cli {

namespace {

struct Options {
  std::string graph;
  std::string truth;
  std::string cover;
  std::string features;
  std::string output;
  std::string out_dir;
  std::vector<std::string> partitions;

  std::string algos = "louvain,lp,greedy";
  std::size_t k = 8;
  std::uint64_t seed = 42;
  std::string involvement = "permanence";

  double tau_l = 0.20;
  std::string similarity = "cosine";
  std::size_t patience = 0;
  std::size_t max_iterations = 0;
  std::size_t pair_samples = 0;
  std::size_t threads = 0;

  PlantedConfig planted;
};

// Ordered key=value lines, written beside an output file.
class Manifest {
 public:
  template <typename T>
  void add(std::string key, const T& value) {
    if constexpr (std::is_same_v<T, double>) {
      entries_.emplace_back(std::move(key), format_real(value));
    } else if constexpr (std::is_arithmetic_v<T>) {
      entries_.emplace_back(std::move(key), std::to_string(value));
    } else {
      entries_.emplace_back(std::move(key), std::string(value));
    }
  }

  std::string str() const {
    std::string out;
    for (const auto& [k, v] : entries_) out += k + "=" + v + "\n";
    return out;
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

using Clock = std::chrono::steady_clock;

std::size_t thread_count(const Options& o) {
  return o.threads > 0 ? o.threads : default_thread_count();
}

// Wall time is kept out of the manifest so reruns stay byte-identical.
void write_outputs(const std::string& output, const std::string& body,
                   Manifest manifest, const std::string& command,
                   Clock::time_point start) {
  write_file(output, body);
  manifest.add("command", command);
  manifest.add("version", std::string(ENCOD_VERSION));
  write_file(output + ".manifest", manifest.str());
  const double seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  write_file(output + ".timing", "wall_seconds=" + format_real(seconds) + "\n");
}

void add_ensemble_fields(Manifest& m, const Options& o) {
  m.add("algos", o.algos);
  m.add("K", o.k);
  m.add("seed", o.seed);
  for (std::size_t i = 0; i < o.partitions.size(); ++i) {
    m.add("partition." + std::to_string(i), o.partitions[i]);
  }
}

EncodConfig optimizer_config(const Options& o) {
  EncodConfig config;
  config.tau_l = o.tau_l;
  config.similarity = parse_similarity(o.similarity);
  config.patience = o.patience;
  config.max_iterations = o.max_iterations;
  config.seed = o.seed;
  config.pair_samples = o.pair_samples;
  config.threads = thread_count(o);
  return config;
}

void add_optimizer_fields(Manifest& m, const Options& o, std::size_t n) {
  const EncodConfig config = optimizer_config(o);
  m.add("tau_l", o.tau_l);
  m.add("sim", o.similarity);
  m.add("patience", config.effective_patience(n));
  m.add("max_iterations", config.effective_max_iterations(n));
  m.add("pair_samples", o.pair_samples);
}

// Native partitions for --algos plus every --partition file.
BaseEnsemble make_ensemble(const Options& o, const Graph& graph) {
  std::vector<DisjointPartition> partitions;
  if (!o.algos.empty()) {
    const auto algorithms = parse_algorithm_list(o.algos);
    BaseEnsemble native =
        build_ensemble(graph, algorithms, o.k, o.seed, thread_count(o));
    partitions.assign(native.partitions().begin(), native.partitions().end());
  }
  for (const auto& path : o.partitions) {
    partitions.push_back(ingest_partition(read_file(path), graph));
  }
  if (partitions.empty()) {
    throw ConfigError("--algos is empty and no --partition file was given");
  }
  return BaseEnsemble(std::move(partitions));
}

void finish_run(const Options& o, const Graph& graph,
                const FeatureMatrix& features, Manifest manifest,
                const std::string& command, Clock::time_point start,
                std::ostream& out) {
  const RunResult result = run(graph, features, optimizer_config(o));
  add_optimizer_fields(manifest, o, graph.num_vertices());
  manifest.add("vertices", graph.num_vertices());
  manifest.add("edges", graph.num_edges());
  manifest.add("communities", result.cover.size());
  manifest.add("iterations", result.iterations);
  manifest.add("accepted", result.accepted);
  manifest.add("log_likelihood", result.log_likelihood);
  write_file(o.output + ".thresholds", write_thresholds(result.cover));
  write_outputs(o.output, write_cover(graph, result.cover),
                std::move(manifest), command, start);
  out << "communities=" << result.cover.size()
      << " log_likelihood=" << format_real(result.log_likelihood)
      << " iterations=" << result.iterations << "\n";
}

int cmd_gen(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  const PlantedInstance instance = generate_planted(o.planted);
  Manifest m;
  m.add("n", o.planted.n);
  m.add("communities", o.planted.communities);
  m.add("size", o.planted.community_size);
  m.add("overlap", o.planted.overlap_fraction);
  m.add("p_in", o.planted.p_in);
  m.add("p_out", o.planted.p_out);
  m.add("seed", o.planted.seed);
  m.add("edges", instance.graph.num_edges());
  m.add("truth", o.truth);
  write_file(o.truth, write_cover(instance.graph, instance.truth));
  write_outputs(o.output, write_edge_list(instance.graph), std::move(m), "gen",
                start);
  out << "vertices=" << instance.graph.num_vertices()
      << " edges=" << instance.graph.num_edges() << "\n";
  return kExitOk;
}

int cmd_base(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  const Graph graph = load_edge_list_file(o.graph);
  const BaseEnsemble ensemble = make_ensemble(o, graph);
  std::filesystem::create_directories(o.out_dir);
  Manifest m;
  m.add("graph", o.graph);
  add_ensemble_fields(m, o);
  std::string index;
  for (std::size_t i = 0; i < ensemble.size(); ++i) {
    const auto& p = ensemble.partitions()[i];
    const std::string name = "partition_" + std::to_string(i) + ".txt";
    write_file((std::filesystem::path(o.out_dir) / name).string(),
               write_partition(graph, p));
    index += name + " " + p.algorithm() + " " + std::to_string(p.seed()) + " " +
             std::to_string(p.community_count()) + " " +
             format_real(modularity(graph, p)) + "\n";
  }
  m.add("partitions", ensemble.size());
  m.add("xi", ensemble.total_communities());
  write_outputs((std::filesystem::path(o.out_dir) / "index.txt").string(),
                index, std::move(m), "base", start);
  out << "partitions=" << ensemble.size()
      << " xi=" << ensemble.total_communities() << "\n";
  return kExitOk;
}

int cmd_features(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  const Graph graph = load_edge_list_file(o.graph);
  const BaseEnsemble ensemble = make_ensemble(o, graph);
  const FeatureMatrix features = extract_features(
      ensemble, graph, parse_involvement(o.involvement), thread_count(o));
  Manifest m;
  m.add("graph", o.graph);
  add_ensemble_fields(m, o);
  m.add("inv", o.involvement);
  m.add("xi", ensemble.total_communities());
  write_outputs(o.output, write_features(graph, features), std::move(m),
                "features", start);
  out << "vertices=" << features.rows() << " dim=" << features.dim() << "\n";
  return kExitOk;
}

int cmd_run(const Options& o, const std::string& command, std::ostream& out) {
  const auto start = Clock::now();
  const Graph graph = load_edge_list_file(o.graph);
  const FeatureMatrix features =
      ingest_vertex_features(read_file(o.features), graph);
  Manifest m;
  m.add("graph", o.graph);
  m.add("features", o.features);
  m.add("seed", o.seed);
  m.add("feature_dim", features.dim());
  finish_run(o, graph, features, std::move(m), command, start, out);
  return kExitOk;
}

int cmd_pipeline(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  const Graph graph = load_edge_list_file(o.graph);
  optimizer_config(o).validate();
  const BaseEnsemble ensemble = make_ensemble(o, graph);
  const FeatureMatrix features = extract_features(
      ensemble, graph, parse_involvement(o.involvement), thread_count(o));
  Manifest m;
  m.add("graph", o.graph);
  add_ensemble_fields(m, o);
  m.add("inv", o.involvement);
  m.add("xi", ensemble.total_communities());
  finish_run(o, graph, features, std::move(m), "pipeline", start, out);
  return kExitOk;
}

int cmd_eval(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph graph = load_edge_list_file(o.graph);
  std::vector<std::string> warnings;
  const OverlapCover detected =
      ingest_cover(read_file(o.cover), graph, &warnings);
  const OverlapCover reference =
      ingest_cover(read_file(o.truth), graph, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  const std::string report = format_report(evaluate(detected, reference));
  out << report;
  if (!o.output.empty()) write_file(o.output, report);
  return kExitOk;
}

int cmd_analyze(const Options& o, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const Graph graph = load_edge_list_file(o.graph);
  std::vector<std::string> warnings;
  const OverlapCover reference =
      ingest_cover(read_file(o.truth), graph, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  const BaseEnsemble ensemble = make_ensemble(o, graph);
  const std::string table =
      write_curve(cooccurrence_curve(graph, ensemble, reference));
  if (o.output.empty()) {
    out << table;
    return kExitOk;
  }
  Manifest m;
  m.add("graph", o.graph);
  m.add("truth", o.truth);
  add_ensemble_fields(m, o);
  write_outputs(o.output, table, std::move(m), "analyze", start);
  return kExitOk;
}

CLI::Validator open_unit_interval() {
  return CLI::Validator(
      [](std::string& value) -> std::string {
        double x = 0.0;
        if (!CLI::detail::lexical_cast(value, x) || !(x > 0.0 && x < 1.0)) {
          return "value " + value + " must lie strictly between 0 and 1";
        }
        return {};
      },
      "(0,1)");
}

void add_ensemble_flags(CLI::App* app, Options& o) {
  app->add_option("--algos", o.algos,
                  "Comma-separated base algorithms (louvain, lp, greedy)")
      ->capture_default_str();
  app->add_option("-K,--orderings", o.k, "Vertex orderings per algorithm")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app->add_option("--partition", o.partitions,
                  "External partition file to add to the ensemble")
      ->check(CLI::ExistingFile);
  app->add_option("--seed", o.seed, "Base seed")->capture_default_str();
  app->add_option("--threads", o.threads,
                  "Worker threads (default: $ENCOD_THREADS or all cores)");
}

void add_involvement_flag(CLI::App* app, Options& o) {
  app->add_option("--inv", o.involvement, "Involvement function")
      ->capture_default_str()
      ->check(CLI::IsMember({"closeness", "permanence", "binary"}));
}

void add_optimizer_flags(CLI::App* app, Options& o) {
  app->add_option("--tau-l", o.tau_l, "Global community threshold")
      ->capture_default_str()
      ->check(open_unit_interval());
  app->add_option("--sim", o.similarity, "Feature similarity")
      ->capture_default_str()
      ->check(CLI::IsMember({"cosine", "pearson"}));
  app->add_option("--patience", o.patience,
                  "Iterations without improvement before stopping (0: |V|)");
  app->add_option("--max-iter", o.max_iterations,
                  "Iteration cap (0: 4 |V|)");
  app->add_option("--pair-samples", o.pair_samples,
                  "Estimate the pair sum from this many sampled pairs (0: exact)");
  if (!app->get_option_no_throw("--seed")) {
    app->add_option("--seed", o.seed, "Seed")->capture_default_str();
  }
  if (!app->get_option_no_throw("--threads")) {
    app->add_option("--threads", o.threads, "Worker threads");
  }
}

CLI::Option* add_graph_flag(CLI::App* app, Options& o) {
  return app->add_option("--graph", o.graph, "Edge-list file")
      ->required()
      ->check(CLI::ExistingFile);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Ensemble-based overlapping community detection", "encod"};
  app.set_version_flag("--version", std::string(ENCOD_VERSION));
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate a planted benchmark graph");
  gen->add_option("--n", o.planted.n, "Vertices")->capture_default_str();
  gen->add_option("--c", o.planted.communities, "Communities")
      ->capture_default_str();
  gen->add_option("--size", o.planted.community_size, "Community capacity")
      ->capture_default_str();
  gen->add_option("--overlap", o.planted.overlap_fraction,
                  "Fraction of vertices in two communities")
      ->capture_default_str();
  gen->add_option("--p-in", o.planted.p_in, "Intra-community edge probability")
      ->capture_default_str();
  gen->add_option("--p-out", o.planted.p_out,
                  "Inter-community edge probability")
      ->capture_default_str();
  gen->add_option("--seed", o.planted.seed, "Seed")->capture_default_str();
  gen->add_option("-o,--output", o.output, "Edge-list output")->required();
  gen->add_option("--truth", o.truth, "Ground-truth cover output")->required();

  auto* base = app.add_subcommand("base", "Write the base partitions");
  add_graph_flag(base, o);
  add_ensemble_flags(base, o);
  base->add_option("--out-dir", o.out_dir, "Output directory")->required();

  auto* features = app.add_subcommand("features", "Extract vertex features");
  add_graph_flag(features, o);
  add_ensemble_flags(features, o);
  add_involvement_flag(features, o);
  features->add_option("-o,--output", o.output, "Feature file")->required();

  auto* run_cmd =
      app.add_subcommand("run", "Optimize a cover from a feature file");
  add_graph_flag(run_cmd, o);
  run_cmd->add_option("--features", o.features, "Feature file")
      ->required()
      ->check(CLI::ExistingFile);
  add_optimizer_flags(run_cmd, o);
  run_cmd->add_option("-o,--output", o.output, "Cover output")->required();

  auto* mencod = app.add_subcommand(
      "mencod", "Optimize a cover from explicit vertex attributes");
  add_graph_flag(mencod, o);
  mencod->add_option("--vertex-features", o.features, "Attribute file")
      ->required()
      ->check(CLI::ExistingFile);
  add_optimizer_flags(mencod, o);
  mencod->add_option("-o,--output", o.output, "Cover output")->required();

  auto* pipeline =
      app.add_subcommand("pipeline", "Ensemble, features and optimization");
  add_graph_flag(pipeline, o);
  add_ensemble_flags(pipeline, o);
  add_involvement_flag(pipeline, o);
  add_optimizer_flags(pipeline, o);
  pipeline->add_option("-o,--output", o.output, "Cover output")->required();

  auto* eval = app.add_subcommand("eval", "Score a cover against a reference");
  add_graph_flag(eval, o);
  eval->add_option("--cover", o.cover, "Detected cover")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_option("--truth", o.truth, "Reference cover")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_option("-o,--output", o.output, "Also write the report here");

  auto* analyze = app.add_subcommand(
      "analyze", "Co-occurrence curve of the ensemble against a reference");
  add_graph_flag(analyze, o);
  add_ensemble_flags(analyze, o);
  analyze->add_option("--truth", o.truth, "Reference cover")
      ->required()
      ->check(CLI::ExistingFile);
  analyze->add_option("-o,--output", o.output, "Table output (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << ENCOD_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    for (auto* sub : app.get_subcommands()) {
      err << "run 'encod " << sub->get_name() << " --help' for usage\n";
    }
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (base->parsed()) return cmd_base(o, out);
    if (features->parsed()) return cmd_features(o, out);
    if (run_cmd->parsed()) return cmd_run(o, "run", out);
    if (mencod->parsed()) return cmd_run(o, "mencod", out);
    if (pipeline->parsed()) return cmd_pipeline(o, out);
    if (eval->parsed()) return cmd_eval(o, out, err);
    if (analyze->parsed()) return cmd_analyze(o, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace encod::cli
