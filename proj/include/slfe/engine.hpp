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

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "slfe/graph.hpp"
#include "slfe/kernels.hpp"
#include "slfe/metrics.hpp"
#include "slfe/partition.hpp"
#include "slfe/rrg.hpp"

namespace slfe {

enum class Family { MinMax, Arithmetic };

// Built-in pull aggregations; dispatched to the selected kernel backend.
enum class PullOp {
  MinPlusWeight,  // min over in-neighbors of prop[u] + w
  MinSource,      // min over in-neighbors of prop[u]
  MaxMinWeight,   // max over in-neighbors of min(prop[u], w)
  SumSource,      // sum of prop[u] (row order)
  TunkSum,        // sum of (1 + p*prop[u]) / outDegree(u) (row order)
};

enum class VertexOp {
  None,
  DampAndNormalize,  // x -> base + factor*x, then / outDegree when > 0
  Identity,
};

// An application is pure configuration over the engine: aggregation family,
// pull/push operators, the per-vertex update, and init/report rules.
struct AppSpec {
  std::string name;
  Family family = Family::MinMax;
  PullOp pull_op = PullOp::MinPlusWeight;
  bool maximize = false;  // MinMax: false = min-aggregation, true = max

  VertexOp vertex_op = VertexOp::None;
  double damp_base = 0.15;
  double damp_factor = 0.85;
  double tunk_p = 0.5;
  std::vector<double> tunk_out_degree;  // filled for TunkSum

  // Sets initial properties and the initial active set.
  std::function<void(const Graph&, std::vector<double>&, std::vector<uint8_t>&)>
      init;
  // Transforms converged properties into reported values (optional).
  std::function<std::vector<double>(const Graph&, const std::vector<double>&)>
      report;

  // Arithmetic termination.
  uint32_t max_iterations = 100;
  double epsilon = 0.0;  // 0 = always run max_iterations
};

enum class ModePolicy { Auto, ForcePull, ForcePush };

struct EngineConfig {
  bool rr = true;
  uint32_t num_threads = 1;
  uint32_t dense_threshold_divisor = 20;
  ModePolicy mode_policy = ModePolicy::Auto;
  double stability_epsilon = 0.0;  // 0 = exact equality stability predicate
  uint64_t round_cap = 0;          // min/max safety valve; 0 = 10 * numVertices
  kernels::Backend backend = kernels::Backend::Auto;
  int stall_thread = -1;           // test hook, see scheduler
  bool track_pull_counts = false;  // per-vertex pull computation counters
};

struct EngineState {
  std::vector<double> properties;
  std::vector<uint8_t> active;       // current buffer
  std::vector<uint8_t> next_active;  // next buffer (changed this iteration)
  uint64_t active_verts = 0;
  uint32_t iteration = 0;
  Mode mode = Mode::Pull;
  bool pull_was_last = false;
  std::vector<uint32_t> rulers;       // arithmetic: RulerS stability counters
  std::vector<double> stable_values;  // arithmetic: cached stable value
  std::vector<uint8_t> pending;       // min/max: deferred (start-late) pulls
  uint64_t pending_count = 0;
  int64_t last_ruler = -1;
};

struct RunResult {
  std::vector<double> values;  // report-transformed properties
  MetricsLog log;
  double ec_fraction = 0.0;  // arithmetic: share of finished-early vertices
};

// One execution of one app over one graph. Not reentrant; distinct Engine
// instances may run concurrently.
class Engine {
 public:
  Engine(const Graph& g, const AppSpec& app, const RRGuidance* rrg,
         const EngineConfig& config, const PartitionPlan* plan = nullptr);

  // Active-edge heuristic: Pull when the active out-edge count exceeds
  // numEdges / denseThresholdDivisor (strict), Push otherwise — except that
  // deferred (start-late) work keeps the engine in Pull, where that work
  // lives.
  Mode mode_select() const;

  // One min/max iteration at the given ruler: picks the mode, runs it,
  // advances the iteration. Throws UsageError on ruler regression.
  StepMetrics edge_proc_minmax(uint32_t ruler);

  // One arithmetic pull sweep (no vertex update, no iteration advance).
  StepMetrics edge_proc_arith();

  // Push iteration; reactivates every vertex on a pull->push transition.
  StepMetrics push_step();

  // Arithmetic per-vertex update with stability tracking; returns the number
  // of vertices whose value changed.
  uint64_t vertex_update();

  // Full convergence loop: min/max runs until no active or pending work,
  // arithmetic runs max_iterations or until the L1 delta drops below epsilon.
  RunResult run();

  bool minmax_done() const {
    return state_.active_verts == 0 && state_.pending_count == 0;
  }

  const EngineState& state() const { return state_; }
  EngineState& mutable_state() { return state_; }
  const MetricsLog& log() const { return log_; }
  const std::vector<uint32_t>& pull_counts() const { return pull_counts_; }
  double ec_fraction() const;

 private:
  StepMetrics pull_minmax(uint32_t ruler);
  void pull_arith(StepMetrics& m);
  uint64_t vertex_update_internal();
  void finish_step(StepMetrics& m);
  double pull_aggregate(VertexId v, const double* snapshot) const;
  double apply_vertex_op(VertexId v, double x) const;
  uint64_t remote_partitions_touched(VertexId v) const;

  const Graph& graph_;
  const AppSpec& app_;
  const RRGuidance* rrg_;
  EngineConfig config_;
  const PartitionPlan* plan_;
  const kernels::KernelSet& kernels_;

  EngineState state_;
  std::vector<double> snapshot_;
  std::vector<uint8_t> candidates_;
  std::vector<uint8_t> next_pending_;
  std::vector<uint32_t> owner_;  // per-vertex partition owner (when plan)
  std::vector<uint32_t> pull_counts_;
  MetricsLog log_;
  uint64_t round_cap_ = 0;
};

RunResult run_until_convergence(const Graph& g, const AppSpec& app,
                                const RRGuidance* rrg,
                                const EngineConfig& config,
                                const PartitionPlan* plan = nullptr);

}  // namespace slfe
