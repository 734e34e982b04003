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

#include "slfe/apps.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "slfe/errors.hpp"

namespace slfe {

namespace {

// Smallest-id vertex of every weakly connected component. Scanning ids in
// ascending order makes the first unseen vertex of a component its minimum.
std::vector<VertexId> component_min_sources(const Graph& sym) {
  const uint32_t n = sym.num_vertices();
  std::vector<uint8_t> seen(n, 0);
  std::vector<VertexId> sources;
  std::deque<VertexId> queue;
  for (VertexId v = 0; v < n; ++v) {
    if (seen[v]) continue;
    sources.push_back(v);
    seen[v] = 1;
    queue.push_back(v);
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      Graph::Row row = sym.out_row(u);
      for (size_t i = 0; i < row.len; ++i) {
        VertexId w = row.ids[i];
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  return sources;
}

std::vector<VertexId> zero_in_degree_sources(const Graph& g) {
  std::vector<VertexId> sources;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.in_degree(v) == 0) sources.push_back(v);
  }
  if (sources.empty()) sources.push_back(0);
  return sources;
}

}  // namespace

PreparedApp make_sssp(std::shared_ptr<const Graph> g, VertexId root) {
  g->check_vertex(root);
  PreparedApp app;
  app.graph = std::move(g);
  app.guidance_sources = {root};
  app.spec.name = "sssp";
  app.spec.family = Family::MinMax;
  app.spec.pull_op = PullOp::MinPlusWeight;
  app.spec.maximize = false;
  app.spec.init = [root](const Graph&, std::vector<double>& props,
                         std::vector<uint8_t>& active) {
    std::fill(props.begin(), props.end(), kMaxDistance);
    props[root] = 0.0;
    active[root] = 1;
  };
  return app;
}

PreparedApp make_cc(std::shared_ptr<const Graph> g) {
  PreparedApp app;
  // Weak components: propagate over both directions.
  auto sym = std::make_shared<Graph>(symmetrize(*g));
  app.guidance_sources = component_min_sources(*sym);
  app.graph = std::move(sym);
  app.spec.name = "cc";
  app.spec.family = Family::MinMax;
  app.spec.pull_op = PullOp::MinSource;
  app.spec.maximize = false;
  app.spec.init = [](const Graph& graph, std::vector<double>& props,
                     std::vector<uint8_t>& active) {
    for (VertexId v = 0; v < graph.num_vertices(); ++v) {
      props[v] = static_cast<double>(v);
    }
    std::fill(active.begin(), active.end(), 1);
  };
  return app;
}

PreparedApp make_wp(std::shared_ptr<const Graph> g, VertexId root) {
  g->check_vertex(root);
  PreparedApp app;
  app.graph = std::move(g);
  app.guidance_sources = {root};
  app.spec.name = "wp";
  app.spec.family = Family::MinMax;
  app.spec.pull_op = PullOp::MaxMinWeight;
  app.spec.maximize = true;
  app.spec.init = [root](const Graph&, std::vector<double>& props,
                         std::vector<uint8_t>& active) {
    std::fill(props.begin(), props.end(), 0.0);
    props[root] = kMaxDistance;
    active[root] = 1;
  };
  return app;
}

PreparedApp make_pr(std::shared_ptr<const Graph> g, uint32_t max_iterations,
                    double epsilon, double damp_base, double damp_factor) {
  PreparedApp app;
  app.guidance_sources = zero_in_degree_sources(*g);
  app.graph = std::move(g);
  app.spec.name = "pr";
  app.spec.family = Family::Arithmetic;
  app.spec.pull_op = PullOp::SumSource;
  app.spec.vertex_op = VertexOp::DampAndNormalize;
  app.spec.damp_base = damp_base;
  app.spec.damp_factor = damp_factor;
  app.spec.max_iterations = max_iterations;
  app.spec.epsilon = epsilon;
  app.spec.init = [](const Graph& graph, std::vector<double>& props,
                     std::vector<uint8_t>&) {
    double init = 1.0 / static_cast<double>(graph.num_vertices());
    std::fill(props.begin(), props.end(), init);
  };
  // The stored rank is pre-divided by out-degree; report per-vertex scores.
  app.spec.report = [](const Graph& graph, const std::vector<double>& props) {
    std::vector<double> out(props);
    for (VertexId v = 0; v < graph.num_vertices(); ++v) {
      uint32_t deg = graph.out_degrees()[v];
      if (deg > 0) out[v] = props[v] * static_cast<double>(deg);
    }
    return out;
  };
  return app;
}

PreparedApp make_tr(std::shared_ptr<const Graph> g, uint32_t max_iterations,
                    double epsilon, double p) {
  PreparedApp app;
  app.guidance_sources = zero_in_degree_sources(*g);
  app.spec.name = "tr";
  app.spec.family = Family::Arithmetic;
  app.spec.pull_op = PullOp::TunkSum;
  app.spec.vertex_op = VertexOp::Identity;
  app.spec.tunk_p = p;
  app.spec.max_iterations = max_iterations;
  app.spec.epsilon = epsilon;
  app.spec.tunk_out_degree.resize(g->num_vertices());
  for (VertexId v = 0; v < g->num_vertices(); ++v) {
    app.spec.tunk_out_degree[v] = static_cast<double>(g->out_degrees()[v]);
  }
  app.graph = std::move(g);
  app.spec.init = [](const Graph&, std::vector<double>& props,
                     std::vector<uint8_t>&) {
    std::fill(props.begin(), props.end(), 0.0);
  };
  return app;
}

bool app_needs_root(const std::string& name) {
  return name == "sssp" || name == "wp";
}

PreparedApp make_app(const std::string& name, std::shared_ptr<const Graph> g,
                     VertexId root, uint32_t max_iterations, double epsilon,
                     double tunk_p) {
  if (name == "sssp") return make_sssp(std::move(g), root);
  if (name == "cc") return make_cc(std::move(g));
  if (name == "wp") return make_wp(std::move(g), root);
  if (name == "pr") return make_pr(std::move(g), max_iterations, epsilon);
  if (name == "tr") return make_tr(std::move(g), max_iterations, epsilon, tunk_p);
  throw UsageError("unknown app '" + name +
                   "' (expected sssp, cc, wp, pr, or tr)");
}

RRGuidance prepare_guidance(const PreparedApp& app) {
  SourceSet sources = SourceSet::of(*app.graph, app.guidance_sources);
  return generate_rrg(*app.graph, sources);
}

RRGuidance adapt_guidance_for_arith(RRGuidance rrg) {
  for (RRGRecord& rec : rrg.records) {
    if (!rec.visited) {
      rec.last_iter = std::numeric_limits<uint32_t>::max();
    } else if (rec.last_iter == 0) {
      rec.last_iter = 1;
    }
  }
  return rrg;
}

RunResult run_app(const PreparedApp& app, const RRGuidance& raw_guidance,
                  const EngineConfig& config, const PartitionPlan* plan) {
  if (app.graph->num_vertices() == 0) {
    return RunResult{};
  }
  if (app.spec.family == Family::Arithmetic) {
    RRGuidance adapted = adapt_guidance_for_arith(raw_guidance);
    return run_until_convergence(*app.graph, app.spec, &adapted, config, plan);
  }
  return run_until_convergence(*app.graph, app.spec, &raw_guidance, config,
                               plan);
}

RunResult run_app(const PreparedApp& app, const EngineConfig& config,
                  const PartitionPlan* plan) {
  if (config.rr) {
    throw UsageError("guidance-free run requires rr to be off");
  }
  if (app.graph->num_vertices() == 0) {
    return RunResult{};
  }
  return run_until_convergence(*app.graph, app.spec, nullptr, config, plan);
}

}  // namespace slfe
