/*
Copyright (c) 2026 The slfe authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "slfe/driver.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <thread>

#include "slfe/errors.hpp"
#include "slfe/oracles.hpp"
#include "slfe/partition.hpp"

namespace slfe {

namespace {

bool parse_rmat_uri(const std::string& path, RmatParams& params) {
  if (path.rfind("rmat:", 0) != 0) return false;
  std::string rest = path.substr(5);
  size_t pos = 0;
  while (pos < rest.size()) {
    size_t end = rest.find(',', pos);
    if (end == std::string::npos) end = rest.size();
    std::string kv = rest.substr(pos, end - pos);
    size_t eq = kv.find('=');
    if (eq == std::string::npos) {
      throw UsageError("bad rmat spec '" + path + "', expected key=value");
    }
    std::string key = kv.substr(0, eq);
    unsigned long value = std::strtoul(kv.c_str() + eq + 1, nullptr, 10);
    if (key == "scale") {
      params.scale = static_cast<uint32_t>(value);
    } else if (key == "ef") {
      params.edge_factor = static_cast<uint32_t>(value);
    } else {
      throw UsageError("unknown rmat key '" + key + "'");
    }
    pos = end + 1;
  }
  return true;
}

ModePolicy mode_policy_from_string(const std::string& mode) {
  if (mode == "auto") return ModePolicy::Auto;
  if (mode == "pull") return ModePolicy::ForcePull;
  if (mode == "push") return ModePolicy::ForcePush;
  throw UsageError("unknown mode '" + mode + "' (expected auto, pull, or push)");
}

bool sources_match(const RRGuidance& rrg, const std::vector<VertexId>& sources) {
  return rrg.sources == sources;
}

void check_oracle(const RunConfig& config, const PreparedApp& app,
                  RunOutcome& outcome) {
  const Graph& g = *app.graph;
  const std::vector<double>& got = outcome.result.values;
  std::vector<double> expected;
  bool exact = true;
  if (config.app == "sssp") {
    expected = oracles::dijkstra(g, config.root);
  } else if (config.app == "cc") {
    expected = oracles::union_find_cc(g);
  } else if (config.app == "wp") {
    expected = oracles::widest_dijkstra(g, config.root);
  } else if (config.app == "pr") {
    uint32_t iters = static_cast<uint32_t>(outcome.result.log.steps.size());
    expected = oracles::power_iteration_pr(g, iters);
    exact = false;
  } else {
    uint32_t iters = static_cast<uint32_t>(outcome.result.log.steps.size());
    expected = oracles::tunk_fixed_point(g, iters, config.tunk_p);
    exact = false;
  }
  outcome.oracle_checked = true;
  double l1 = 0.0;
  bool equal = got.size() == expected.size();
  for (size_t i = 0; equal && i < got.size(); ++i) {
    if (exact) {
      equal = got[i] == expected[i];
    } else {
      l1 += std::fabs(got[i] - expected[i]);
    }
  }
  outcome.oracle_l1 = l1;
  outcome.oracle_ok = exact ? equal : (equal && l1 <= 1e-3);
}

}  // namespace

uint32_t resolve_threads(uint32_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SLFE_THREADS")) {
    unsigned long v = std::strtoul(env, nullptr, 10);
    if (v > 0) return static_cast<uint32_t>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

std::shared_ptr<Graph> load_graph(const RunConfig& config) {
  RmatParams rmat;
  if (parse_rmat_uri(config.graph_path, rmat)) {
    rmat.seed = config.seed;
    std::vector<Edge> edges = generate_rmat(rmat);
    return std::make_shared<Graph>(
        Graph::build(1u << rmat.scale, edges));
  }
  EdgeListFormat format;
  format.kind = config.format == "binary" ? EdgeListFormat::Kind::Binary
                                          : EdgeListFormat::Kind::Text;
  if (config.format != "binary" && config.format != "text") {
    throw UsageError("unknown format '" + config.format + "'");
  }
  format.weighted = config.weighted_input;
  EdgeList list = load_edge_list(config.graph_path, format);
  return std::make_shared<Graph>(Graph::build(list.num_vertices, list.edges));
}

RunOutcome execute_run(const RunConfig& config) {
  RunOutcome outcome;
  std::shared_ptr<Graph> input = load_graph(config);
  outcome.input_vertices = input->num_vertices();
  outcome.input_edges = input->num_edges();

  PreparedApp app = make_app(config.app, input, config.root, config.max_iters,
                             config.epsilon, config.tunk_p);
  outcome.run_graph = app.graph;

  PartitionPlan plan = chunk_partition(*app.graph, config.partitions);

  EngineConfig engine_config;
  engine_config.rr = config.rr;
  engine_config.num_threads = resolve_threads(config.threads);
  engine_config.dense_threshold_divisor = config.dense_divisor;
  engine_config.mode_policy = mode_policy_from_string(config.mode);
  engine_config.stability_epsilon = config.stability_epsilon;
  engine_config.backend = kernels::backend_from_string(config.kernel);
  outcome.threads_used = engine_config.num_threads;

  // Guidance: reuse the cache when it matches this graph and source set,
  // regenerate (and refresh the cache) otherwise.
  RRGuidance guidance;
  auto preprocessing_start = std::chrono::steady_clock::now();
  bool loaded = false;
  if (!config.rrg_path.empty()) {
    try {
      guidance = load_rrg(config.rrg_path, *app.graph);
      if (sources_match(guidance, app.guidance_sources)) {
        loaded = true;
      } else {
        outcome.warnings.push_back("guidance cache " + config.rrg_path +
                                   " has a different source set; regenerating");
        outcome.guidance_regenerated = true;
      }
    } catch (const StaleGuidanceError& e) {
      outcome.warnings.push_back(std::string(e.what()) + "; regenerating");
      outcome.guidance_regenerated = true;
    } catch (const FormatError&) {
      // Missing or unreadable cache: generate silently.
    }
  }
  if (!loaded) {
    guidance = prepare_guidance(app);
    if (!config.rrg_path.empty()) save_rrg(config.rrg_path, guidance);
  }
  double preprocessing_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                    preprocessing_start)
          .count();

  outcome.result = run_app(app, guidance, engine_config, &plan);
  outcome.result.log.preprocessing_seconds = preprocessing_seconds;

  if (!config.output_path.empty()) {
    write_results(config.output_path, outcome.result.values);
  }
  if (!config.metrics_path.empty()) {
    outcome.result.log.save_csv(config.metrics_path);
  }
  if (config.run_oracle) {
    check_oracle(config, app, outcome);
  }
  return outcome;
}

CompareOutcome execute_compare(const RunConfig& a, const RunConfig& b) {
  if (a.app != b.app || a.graph_path != b.graph_path || a.root != b.root ||
      a.seed != b.seed) {
    throw UsageError("compare requires the same app, graph, and root");
  }
  CompareOutcome cmp;
  cmp.a = execute_run(a);
  cmp.b = execute_run(b);
  cmp.computation_delta =
      static_cast<int64_t>(cmp.a.result.log.total_computations()) -
      static_cast<int64_t>(cmp.b.result.log.total_computations());
  cmp.message_delta =
      static_cast<int64_t>(cmp.a.result.log.total_messages()) -
      static_cast<int64_t>(cmp.b.result.log.total_messages());
  cmp.runtime_delta = cmp.a.result.log.execution_seconds -
                      cmp.b.result.log.execution_seconds;
  return cmp;
}

std::string results_to_string(const std::vector<double>& values) {
  std::string out;
  char buf[64];
  for (size_t v = 0; v < values.size(); ++v) {
    std::snprintf(buf, sizeof(buf), "%zu %.17g\n", v, values[v]);
    out += buf;
  }
  return out;
}

void write_results(const std::string& path, const std::vector<double>& values) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open " + path + " for writing");
  out << results_to_string(values);
  if (!out) throw FormatError("short write to " + path);
}

void write_compare_curves(const std::string& path, const CompareOutcome& cmp) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open " + path + " for writing");
  out << "iteration,computations_a,computations_b\n";
  size_t rows = std::max(cmp.a.result.log.steps.size(),
                         cmp.b.result.log.steps.size());
  for (size_t i = 0; i < rows; ++i) {
    out << i << ',';
    if (i < cmp.a.result.log.steps.size()) {
      out << cmp.a.result.log.steps[i].computations;
    }
    out << ',';
    if (i < cmp.b.result.log.steps.size()) {
      out << cmp.b.result.log.steps[i].computations;
    }
    out << '\n';
  }
}

std::vector<Edge> worked_example_edges() {
  return {
      {0, 1, 1.0}, {0, 3, 2.0}, {1, 2, 1.0},
      {3, 4, 2.0}, {2, 4, 1.0}, {4, 5, 1.0},
  };
}

}  // namespace slfe
