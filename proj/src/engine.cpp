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

#include "slfe/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstring>

#include "slfe/errors.hpp"
#include "slfe/scheduler.hpp"

namespace slfe {

namespace {

// Lowering or raising a property under contention; the final value is the
// same for any interleaving because min/max aggregation is idempotent and
// commutative.
void atomic_improve(double* slot, double candidate, bool maximize) {
  std::atomic_ref<double> ref(*slot);
  double current = ref.load(std::memory_order_relaxed);
  if (maximize) {
    while (candidate > current) {
      if (ref.compare_exchange_weak(current, candidate,
                                    std::memory_order_relaxed)) {
        return;
      }
    }
  } else {
    while (candidate < current) {
      if (ref.compare_exchange_weak(current, candidate,
                                    std::memory_order_relaxed)) {
        return;
      }
    }
  }
}

void mark_byte(uint8_t* slot) {
  std::atomic_ref<uint8_t> ref(*slot);
  ref.store(1, std::memory_order_relaxed);
}

}  // namespace

Engine::Engine(const Graph& g, const AppSpec& app, const RRGuidance* rrg,
               const EngineConfig& config, const PartitionPlan* plan)
    : graph_(g),
      app_(app),
      rrg_(rrg),
      config_(config),
      plan_(plan),
      kernels_(kernels::select(config.backend)) {
  const uint32_t n = g.num_vertices();
  if (config_.num_threads < 1) throw ArgumentError("numThreads must be >= 1");
  if (config_.dense_threshold_divisor < 1) {
    throw ArgumentError("denseThresholdDivisor must be >= 1");
  }
  if (config_.rr && rrg_ == nullptr) {
    throw UsageError("redundancy reduction enabled but no guidance supplied");
  }
  if (rrg_ != nullptr && rrg_->records.size() != n) {
    throw UsageError("guidance size does not match the graph");
  }
  if (app_.pull_op == PullOp::TunkSum && app_.tunk_out_degree.size() != n) {
    throw UsageError("TunkSum requires a per-vertex out-degree table");
  }
  const bool summing = app_.pull_op == PullOp::SumSource ||
                       app_.pull_op == PullOp::TunkSum;
  if ((app_.family == Family::MinMax) == summing) {
    throw UsageError("pull operator does not match the aggregation family");
  }

  state_.properties.assign(n, 0.0);
  state_.active.assign(n, 0);
  state_.next_active.assign(n, 0);
  if (app_.init) app_.init(g, state_.properties, state_.active);
  state_.active_verts = 0;
  for (uint8_t f : state_.active) state_.active_verts += f;

  if (app_.family == Family::Arithmetic) {
    state_.rulers.assign(n, 0);
    state_.stable_values = state_.properties;
  } else {
    state_.pending.assign(n, 0);
  }
  snapshot_.assign(n, 0.0);
  candidates_.assign(n, 0);
  next_pending_.assign(n, 0);
  if (config_.track_pull_counts) pull_counts_.assign(n, 0);
  if (plan_ != nullptr) {
    owner_.resize(n);
    for (VertexId v = 0; v < n; ++v) owner_[v] = plan_->owner_of(v);
  }
  round_cap_ = config_.round_cap != 0 ? config_.round_cap
                                      : 10ull * std::max<uint64_t>(n, 1);
}

Mode Engine::mode_select() const {
  if (app_.family == Family::Arithmetic) return Mode::Pull;
  if (config_.mode_policy == ModePolicy::ForcePull) return Mode::Pull;
  if (config_.mode_policy == ModePolicy::ForcePush) return Mode::Push;
  const uint32_t n = graph_.num_vertices();
  uint64_t active_out_edges = kernels_.masked_degree_sum(
      graph_.out_degrees().data(), state_.active.data(), n);
  double threshold = static_cast<double>(graph_.num_edges()) /
                     static_cast<double>(config_.dense_threshold_divisor);
  if (static_cast<double>(active_out_edges) > threshold) return Mode::Pull;
  // Deferred pulls live in pull mode; switching would pay a transition that
  // reactivates the whole graph just to flush them.
  if (state_.pending_count > 0) return Mode::Pull;
  return Mode::Push;
}

double Engine::pull_aggregate(VertexId v, const double* snapshot) const {
  Graph::Row row = graph_.in_row(v);
  switch (app_.pull_op) {
    case PullOp::MinPlusWeight:
      return kernels_.min_plus(row, snapshot);
    case PullOp::MinSource:
      return kernels_.min_source(row, snapshot);
    case PullOp::MaxMinWeight:
      return kernels_.max_min_weight(row, snapshot);
    case PullOp::SumSource:
      return kernels_.sum_source(row, snapshot);
    case PullOp::TunkSum:
      return kernels_.tunk_sum(row, snapshot, app_.tunk_out_degree.data(),
                               app_.tunk_p);
  }
  throw UsageError("unknown pull operator");
}

double Engine::apply_vertex_op(VertexId v, double x) const {
  switch (app_.vertex_op) {
    case VertexOp::DampAndNormalize: {
      double nv = app_.damp_base + app_.damp_factor * x;
      uint32_t deg = graph_.out_degrees()[v];
      if (deg > 0) nv /= static_cast<double>(deg);
      return nv;
    }
    case VertexOp::Identity:
      return x;
    case VertexOp::None:
      break;
  }
  throw UsageError("app has no vertex operator");
}

uint64_t Engine::remote_partitions_touched(VertexId v) const {
  if (plan_ == nullptr || plan_->num_partitions() <= 1) return 0;
  Graph::Row row = graph_.in_row(v);
  uint32_t self = owner_[v];
  if (plan_->num_partitions() <= 64) {
    uint64_t mask = 0;
    for (size_t i = 0; i < row.len; ++i) {
      uint32_t p = owner_[row.ids[i]];
      if (p != self) mask |= 1ull << p;
    }
    return static_cast<uint64_t>(__builtin_popcountll(mask));
  }
  std::vector<uint8_t> seen(plan_->num_partitions(), 0);
  uint64_t count = 0;
  for (size_t i = 0; i < row.len; ++i) {
    uint32_t p = owner_[row.ids[i]];
    if (p != self && !seen[p]) {
      seen[p] = 1;
      ++count;
    }
  }
  return count;
}

StepMetrics Engine::edge_proc_minmax(uint32_t ruler) {
  if (app_.family != Family::MinMax) {
    throw UsageError("edge_proc_minmax requires a min/max app");
  }
  if (static_cast<int64_t>(ruler) < state_.last_ruler) {
    throw UsageError("ruler regression: " + std::to_string(ruler) +
                     " after " + std::to_string(state_.last_ruler));
  }
  state_.last_ruler = static_cast<int64_t>(ruler);
  Mode mode = mode_select();
  if (mode == Mode::Push) return push_step();
  StepMetrics m = pull_minmax(ruler);
  return m;
}

StepMetrics Engine::pull_minmax(uint32_t ruler) {
  const uint32_t n = graph_.num_vertices();
  const bool rr = config_.rr;
  state_.mode = Mode::Pull;
  state_.pull_was_last = true;

  StepMetrics m;
  m.active_vertices = state_.active_verts;
  snapshot_ = state_.properties;
  std::fill(candidates_.begin(), candidates_.end(), 0);

  // Candidates: destinations of active sources, plus deferred pulls.
  parallel_chunks(
      0, n, config_.num_threads,
      [&](uint64_t first, uint64_t last, uint32_t) {
        for (uint64_t v = first; v < last; ++v) {
          if (state_.active[v]) {
            Graph::Row row = graph_.out_row(static_cast<VertexId>(v));
            for (size_t i = 0; i < row.len; ++i) {
              mark_byte(&candidates_[row.ids[i]]);
            }
          }
          if (rr && state_.pending[v]) mark_byte(&candidates_[v]);
        }
      },
      config_.stall_thread);

  std::atomic<uint64_t> computations{0}, skipped{0}, messages{0},
      considered{0}, changed{0}, new_pending{0};
  const double* snapshot = snapshot_.data();
  const bool maximize = app_.maximize;

  parallel_chunks(
      0, n, config_.num_threads,
      [&](uint64_t first, uint64_t last, uint32_t) {
        uint64_t l_comp = 0, l_skip = 0, l_msg = 0, l_cons = 0, l_changed = 0,
                 l_pend = 0;
        for (uint64_t vi = first; vi < last; ++vi) {
          VertexId v = static_cast<VertexId>(vi);
          next_pending_[v] = 0;
          if (!candidates_[v]) continue;
          if (graph_.in_degree(v) == 0) continue;
          ++l_cons;
          if (rr && ruler < rrg_->last_iter(v)) {
            ++l_skip;
            next_pending_[v] = 1;
            ++l_pend;
            continue;
          }
          ++l_comp;
          if (config_.track_pull_counts) ++pull_counts_[v];
          double agg = pull_aggregate(v, snapshot);
          l_msg += remote_partitions_touched(v);
          double current = state_.properties[v];
          bool better = maximize ? agg > current : agg < current;
          if (better) {
            state_.properties[v] = agg;
            state_.next_active[v] = 1;
            ++l_changed;
          }
        }
        computations += l_comp;
        skipped += l_skip;
        messages += l_msg;
        considered += l_cons;
        changed += l_changed;
        new_pending += l_pend;
      },
      config_.stall_thread);

  m.computations = computations.load();
  m.skipped_by_rr = skipped.load();
  m.messages = messages.load();
  m.candidates = considered.load();
  m.changed = changed.load();
  if (m.computations + m.skipped_by_rr != m.candidates) {
    throw Error("pull conservation violated: computations + skipped != candidates");
  }
  state_.pending.swap(next_pending_);
  state_.pending_count = new_pending.load();
  finish_step(m);
  return m;
}

StepMetrics Engine::push_step() {
  if (app_.family != Family::MinMax) {
    throw UsageError("arithmetic apps execute in pull mode only");
  }
  const uint32_t n = graph_.num_vertices();
  state_.mode = Mode::Push;

  if (state_.pull_was_last) {
    // Transition phase: deactivated vertices may hold updates their
    // successors never saw, so every vertex pushes once.
    std::fill(state_.active.begin(), state_.active.end(), 1);
    state_.active_verts = n;
    std::fill(state_.pending.begin(), state_.pending.end(), 0);
    state_.pending_count = 0;
    state_.pull_was_last = false;
  }

  StepMetrics m;
  m.active_vertices = state_.active_verts;
  snapshot_ = state_.properties;

  std::atomic<uint64_t> computations{0}, messages{0}, relaxations{0};
  const double* snapshot = snapshot_.data();
  const bool maximize = app_.maximize;
  const bool count_msgs = plan_ != nullptr && plan_->num_partitions() > 1;

  parallel_chunks(
      0, n, config_.num_threads,
      [&](uint64_t first, uint64_t last, uint32_t) {
        uint64_t l_comp = 0, l_msg = 0, l_relax = 0;
        for (uint64_t vi = first; vi < last; ++vi) {
          VertexId v = static_cast<VertexId>(vi);
          if (!state_.active[v]) continue;
          Graph::Row row = graph_.out_row(v);
          if (row.len == 0) continue;
          ++l_comp;
          double base = snapshot[v];
          for (size_t i = 0; i < row.len; ++i) {
            VertexId dst = row.ids[i];
            double candidate;
            switch (app_.pull_op) {
              case PullOp::MinPlusWeight:
                candidate = base + row.weights[i];
                break;
              case PullOp::MinSource:
                candidate = base;
                break;
              case PullOp::MaxMinWeight:
                candidate = std::min(base, row.weights[i]);
                break;
              default:
                throw UsageError("app has no push operator");
            }
            atomic_improve(&state_.properties[dst], candidate, maximize);
            ++l_relax;
            if (count_msgs && owner_[v] != owner_[dst]) ++l_msg;
          }
        }
        computations += l_comp;
        messages += l_msg;
        relaxations += l_relax;
      },
      config_.stall_thread);

  // Deterministic activation: compare against the iteration-start snapshot.
  std::atomic<uint64_t> changed{0};
  parallel_chunks(
      0, n, config_.num_threads,
      [&](uint64_t first, uint64_t last, uint32_t) {
        uint64_t l_changed = 0;
        for (uint64_t v = first; v < last; ++v) {
          if (state_.properties[v] != snapshot_[v]) {
            state_.next_active[v] = 1;
            ++l_changed;
          }
        }
        changed += l_changed;
      },
      config_.stall_thread);

  m.computations = computations.load();
  m.messages = messages.load();
  m.edge_relaxations = relaxations.load();
  m.changed = changed.load();
  finish_step(m);
  return m;
}

void Engine::finish_step(StepMetrics& m) {
  m.iteration = state_.iteration;
  m.mode = state_.mode;
  state_.active.swap(state_.next_active);
  std::fill(state_.next_active.begin(), state_.next_active.end(), 0);
  state_.active_verts = m.changed;
  ++state_.iteration;
  log_.steps.push_back(m);
}

StepMetrics Engine::edge_proc_arith() {
  StepMetrics m;
  pull_arith(m);
  finish_step(m);
  return m;
}

void Engine::pull_arith(StepMetrics& m) {
  if (app_.family != Family::Arithmetic) {
    throw UsageError("edge_proc_arith requires an arithmetic app (RulerS missing)");
  }
  const uint32_t n = graph_.num_vertices();
  const bool rr = config_.rr;
  state_.mode = Mode::Pull;
  state_.pull_was_last = true;

  snapshot_ = state_.properties;
  std::atomic<uint64_t> computations{0}, skipped{0}, messages{0};
  const double* snapshot = snapshot_.data();

  parallel_chunks(
      0, n, config_.num_threads,
      [&](uint64_t first, uint64_t last, uint32_t) {
        uint64_t l_comp = 0, l_skip = 0, l_msg = 0;
        for (uint64_t vi = first; vi < last; ++vi) {
          VertexId v = static_cast<VertexId>(vi);
          if (graph_.in_degree(v) == 0) continue;
          if (rr && state_.rulers[v] >= rrg_->last_iter(v)) {
            // Finished early: the property stays at its cached stable value.
            ++l_skip;
            continue;
          }
          ++l_comp;
          state_.properties[v] = pull_aggregate(v, snapshot);
          l_msg += remote_partitions_touched(v);
        }
        computations += l_comp;
        skipped += l_skip;
        messages += l_msg;
      },
      config_.stall_thread);

  m.computations = computations.load();
  m.skipped_by_rr = skipped.load();
  m.messages = messages.load();
  m.candidates = m.computations + m.skipped_by_rr;
  m.active_vertices = m.computations;
}

uint64_t Engine::vertex_update() { return vertex_update_internal(); }

uint64_t Engine::vertex_update_internal() {
  if (app_.family != Family::Arithmetic) {
    throw UsageError("vertex_update requires an arithmetic app (RulerS missing)");
  }
  if (app_.vertex_op == VertexOp::None) {
    throw UsageError("app has no vertex operator");
  }
  const uint32_t n = graph_.num_vertices();
  const bool rr = config_.rr;
  const double eps = config_.stability_epsilon;
  std::atomic<uint64_t> changed{0};

  parallel_chunks(
      0, n, config_.num_threads,
      [&](uint64_t first, uint64_t last, uint32_t) {
        uint64_t l_changed = 0;
        for (uint64_t vi = first; vi < last; ++vi) {
          VertexId v = static_cast<VertexId>(vi);
          if (rr && state_.rulers[v] >= rrg_->last_iter(v)) continue;
          double nv = apply_vertex_op(v, state_.properties[v]);
          bool stable = eps > 0.0 ? std::fabs(nv - state_.stable_values[v]) <= eps
                                  : nv == state_.stable_values[v];
          if (stable) {
            state_.rulers[v] += 1;
          } else {
            state_.rulers[v] = 0;
            state_.stable_values[v] = nv;
            ++l_changed;
          }
          state_.properties[v] = nv;
        }
        changed += l_changed;
      },
      config_.stall_thread);
  return changed.load();
}

double Engine::ec_fraction() const {
  if (app_.family != Family::Arithmetic || graph_.num_vertices() == 0 ||
      rrg_ == nullptr) {
    return 0.0;
  }
  uint64_t ec = 0;
  for (VertexId v = 0; v < graph_.num_vertices(); ++v) {
    if (state_.rulers[v] >= rrg_->last_iter(v)) ++ec;
  }
  return static_cast<double>(ec) / static_cast<double>(graph_.num_vertices());
}

RunResult Engine::run() {
  auto start = std::chrono::steady_clock::now();
  const uint32_t n = graph_.num_vertices();

  if (app_.family == Family::MinMax) {
    while (!minmax_done()) {
      if (state_.iteration > round_cap_) {
        throw DivergenceError(app_.name + " exceeded the iteration cap of " +
                              std::to_string(round_cap_));
      }
      edge_proc_minmax(state_.iteration);
    }
  } else if (n > 0) {
    for (uint32_t it = 0; it < app_.max_iterations; ++it) {
      StepMetrics m;
      pull_arith(m);
      m.changed = vertex_update_internal();
      double delta = 0.0;
      for (uint32_t v = 0; v < n; ++v) {
        delta += std::fabs(state_.properties[v] - snapshot_[v]);
      }
      m.delta = delta;
      finish_step(m);
      if (app_.epsilon > 0.0 && delta < app_.epsilon) break;
    }
  }

  RunResult result;
  result.log = std::move(log_);
  result.log.execution_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  result.ec_fraction = ec_fraction();
  result.values = app_.report ? app_.report(graph_, state_.properties)
                              : state_.properties;
  return result;
}

RunResult run_until_convergence(const Graph& g, const AppSpec& app,
                                const RRGuidance* rrg,
                                const EngineConfig& config,
                                const PartitionPlan* plan) {
  Engine engine(g, app, rrg, config, plan);
  return engine.run();
}

}  // namespace slfe
