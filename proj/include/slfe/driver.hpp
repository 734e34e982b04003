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

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "slfe/apps.hpp"
#include "slfe/engine.hpp"
#include "slfe/graph.hpp"
#include "slfe/ingest.hpp"

namespace slfe {

// One reproducible run: load -> partition -> guidance -> execute -> report.
struct RunConfig {
  std::string app;
  std::string graph_path;  // file path, or "rmat:scale=S,ef=F" synthetic
  std::string format = "text";  // text | binary
  bool weighted_input = false;
  uint32_t root = 0;
  uint32_t partitions = 1;
  uint32_t threads = 0;  // 0 = SLFE_THREADS env, then hardware
  bool rr = true;
  double stability_epsilon = 0.0;
  uint32_t dense_divisor = 20;
  uint32_t max_iters = 30;
  double epsilon = 0.0;
  double tunk_p = 0.5;
  std::string rrg_path;      // guidance cache (optional)
  std::string output_path;   // results file (optional)
  std::string metrics_path;  // metrics CSV (optional)
  uint64_t seed = 1;
  std::string mode = "auto";    // auto | pull | push
  std::string kernel = "auto";  // auto | scalar | avx2
  bool run_oracle = false;
};

struct RunOutcome {
  RunResult result;
  std::shared_ptr<const Graph> run_graph;  // symmetrized for cc
  uint64_t input_vertices = 0;
  uint64_t input_edges = 0;
  uint32_t threads_used = 1;
  bool guidance_regenerated = false;  // stale cache replaced
  std::vector<std::string> warnings;
  bool oracle_checked = false;
  bool oracle_ok = true;
  double oracle_l1 = 0.0;
};

struct CompareOutcome {
  RunOutcome a;
  RunOutcome b;
  int64_t computation_delta = 0;  // a - b
  int64_t message_delta = 0;
  double runtime_delta = 0.0;
};

std::shared_ptr<Graph> load_graph(const RunConfig& config);

RunOutcome execute_run(const RunConfig& config);

// Paired run over the same app and graph; UsageError when they differ.
CompareOutcome execute_compare(const RunConfig& a, const RunConfig& b);

// Results file: one "vertexId value" line per vertex, %.17g for values.
std::string results_to_string(const std::vector<double>& values);
void write_results(const std::string& path, const std::vector<double>& values);

// Per-iteration computation curves of a paired run.
void write_compare_curves(const std::string& path, const CompareOutcome& cmp);

uint32_t resolve_threads(uint32_t requested);

// The six-vertex worked example used throughout the docs and tests.
std::vector<Edge> worked_example_edges();

}  // namespace slfe
