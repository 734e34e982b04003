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

#include "slfe/engine.hpp"
#include "slfe/graph.hpp"
#include "slfe/rrg.hpp"

namespace slfe {

// A graph application plus the graph it actually runs on (cc runs on the
// symmetrized copy) and the sources its guidance is generated from.
struct PreparedApp {
  std::shared_ptr<const Graph> graph;
  AppSpec spec;
  std::vector<VertexId> guidance_sources;
};

PreparedApp make_sssp(std::shared_ptr<const Graph> g, VertexId root);
PreparedApp make_cc(std::shared_ptr<const Graph> g);
PreparedApp make_wp(std::shared_ptr<const Graph> g, VertexId root);
PreparedApp make_pr(std::shared_ptr<const Graph> g, uint32_t max_iterations,
                    double epsilon, double damp_base = 0.15,
                    double damp_factor = 0.85);
PreparedApp make_tr(std::shared_ptr<const Graph> g, uint32_t max_iterations,
                    double epsilon, double p = 0.5);

// CLI names: sssp, cc, wp, pr, tr. root is ignored by cc/pr/tr.
PreparedApp make_app(const std::string& name, std::shared_ptr<const Graph> g,
                     VertexId root, uint32_t max_iterations, double epsilon,
                     double tunk_p = 0.5);

bool app_needs_root(const std::string& name);

// Raw guidance for the app's run graph and source rule.
RRGuidance prepare_guidance(const PreparedApp& app);

// Arithmetic apps reinterpret lastIter as a stability horizon: a visited
// vertex must be computed at least once (horizon >= 1) and a vertex the
// preprocessing never reached gets no horizon at all (never finishes early).
RRGuidance adapt_guidance_for_arith(RRGuidance rrg);

// Runs the app: adapts guidance for arithmetic apps, executes the engine.
RunResult run_app(const PreparedApp& app, const RRGuidance& raw_guidance,
                  const EngineConfig& config,
                  const PartitionPlan* plan = nullptr);

// Guidance-free run; only valid with config.rr == false.
RunResult run_app(const PreparedApp& app, const EngineConfig& config,
                  const PartitionPlan* plan = nullptr);

}  // namespace slfe
