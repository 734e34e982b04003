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

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "slfe/driver.hpp"
#include "slfe/errors.hpp"
#include "slfe/ingest.hpp"

namespace {

void add_run_flags(CLI::App* cmd, slfe::RunConfig& config, std::string& rr) {
  cmd->add_option("--app", config.app, "application: sssp, cc, wp, pr, tr")
      ->required();
  cmd->add_option("--graph", config.graph_path,
                  "edge-list path or rmat:scale=S,ef=F")
      ->required();
  cmd->add_option("--format", config.format, "text or binary edge list");
  cmd->add_flag("--weighted", config.weighted_input,
                "input carries a weight column");
  cmd->add_option("--root", config.root, "source vertex for sssp/wp");
  cmd->add_option("--partitions", config.partitions,
                  "logical partitions for message accounting");
  cmd->add_option("--threads", config.threads,
                  "worker threads (0 = SLFE_THREADS env, then hardware)");
  cmd->add_option("--rr", rr, "redundancy reduction: on or off");
  cmd->add_option("--stability-epsilon", config.stability_epsilon,
                  "stability predicate tolerance (0 = exact equality)");
  cmd->add_option("--dense-divisor", config.dense_divisor,
                  "pull when activeOutEdges > numEdges / divisor");
  cmd->add_option("--max-iters", config.max_iters,
                  "iteration budget for pr/tr");
  cmd->add_option("--epsilon", config.epsilon,
                  "L1 convergence threshold for pr/tr (0 = run max-iters)");
  cmd->add_option("--tunk-p", config.tunk_p, "tr damping parameter");
  cmd->add_option("--rrg", config.rrg_path, "guidance cache path");
  cmd->add_option("--out", config.output_path, "results file");
  cmd->add_option("--metrics", config.metrics_path, "metrics CSV");
  cmd->add_option("--seed", config.seed, "generator seed");
  cmd->add_option("--mode", config.mode, "auto, pull, or push");
  cmd->add_option("--kernel", config.kernel, "auto, scalar, or avx2");
}

bool parse_rr(const std::string& rr) {
  if (rr == "on") return true;
  if (rr == "off") return false;
  throw slfe::UsageError("--rr expects on or off, got '" + rr + "'");
}

void print_summary(const slfe::RunConfig& config,
                   const slfe::RunOutcome& outcome) {
  const slfe::MetricsLog& log = outcome.result.log;
  std::printf("app: %s  graph: %s  vertices: %llu  edges: %llu\n",
              config.app.c_str(), config.graph_path.c_str(),
              static_cast<unsigned long long>(outcome.input_vertices),
              static_cast<unsigned long long>(outcome.input_edges));
  std::printf("rr: %s  threads: %u  partitions: %u\n",
              config.rr ? "on" : "off", outcome.threads_used,
              config.partitions);
  std::printf("iterations: %zu\n", log.steps.size());
  std::printf("total computations: %llu\n",
              static_cast<unsigned long long>(log.total_computations()));
  std::printf("skipped by rr: %llu\n",
              static_cast<unsigned long long>(log.total_skipped()));
  std::printf("cross-partition messages: %llu\n",
              static_cast<unsigned long long>(log.total_messages()));
  if (config.app == "pr" || config.app == "tr") {
    std::printf("early-converged vertex fraction: %.4f\n",
                outcome.result.ec_fraction);
  }
  double ratio = log.execution_seconds > 0.0
                     ? log.preprocessing_seconds / log.execution_seconds
                     : 0.0;
  std::printf("preprocessing: %.6f s  execution: %.6f s  (ratio %.3f)\n",
              log.preprocessing_seconds, log.execution_seconds, ratio);
  for (const std::string& w : outcome.warnings) {
    std::printf("warning: %s\n", w.c_str());
  }
  if (outcome.oracle_checked) {
    if (outcome.oracle_ok) {
      std::printf("oracle: agree (L1 %.3g)\n", outcome.oracle_l1);
    } else {
      std::printf("oracle: DISAGREE (L1 %.3g)\n", outcome.oracle_l1);
    }
  }
}

int run_command(const slfe::RunConfig& config) {
  slfe::RunOutcome outcome = slfe::execute_run(config);
  print_summary(config, outcome);
  if (!config.output_path.empty()) {
    std::printf("results: %s\n", config.output_path.c_str());
  }
  if (!config.metrics_path.empty()) {
    std::printf("metrics: %s\n", config.metrics_path.c_str());
  }
  return outcome.oracle_checked && !outcome.oracle_ok ? 2 : 0;
}

int compare_command(const slfe::RunConfig& base, const std::string& rr_a,
                    const std::string& rr_b, const std::string& curves) {
  slfe::RunConfig a = base;
  slfe::RunConfig b = base;
  a.rr = parse_rr(rr_a);
  b.rr = parse_rr(rr_b);
  if (!base.output_path.empty()) {
    a.output_path = base.output_path + ".a";
    b.output_path = base.output_path + ".b";
  }
  if (!base.metrics_path.empty()) {
    a.metrics_path = base.metrics_path + ".a";
    b.metrics_path = base.metrics_path + ".b";
  }
  slfe::CompareOutcome cmp = slfe::execute_compare(a, b);
  std::printf("compare %s on %s: A(rr=%s) vs B(rr=%s)\n", base.app.c_str(),
              base.graph_path.c_str(), rr_a.c_str(), rr_b.c_str());
  std::printf("  computations: %llu vs %llu (delta %lld)\n",
              static_cast<unsigned long long>(
                  cmp.a.result.log.total_computations()),
              static_cast<unsigned long long>(
                  cmp.b.result.log.total_computations()),
              static_cast<long long>(cmp.computation_delta));
  std::printf(
      "  messages: %llu vs %llu (delta %lld)\n",
      static_cast<unsigned long long>(cmp.a.result.log.total_messages()),
      static_cast<unsigned long long>(cmp.b.result.log.total_messages()),
      static_cast<long long>(cmp.message_delta));
  std::printf("  runtime: %.6f s vs %.6f s\n",
              cmp.a.result.log.execution_seconds,
              cmp.b.result.log.execution_seconds);
  if (base.app == "pr" || base.app == "tr") {
    std::printf("  early-converged fraction: %.4f vs %.4f\n",
                cmp.a.result.ec_fraction, cmp.b.result.ec_fraction);
  }
  if (!curves.empty()) {
    slfe::write_compare_curves(curves, cmp);
    std::printf("  curves: %s\n", curves.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"slfe: redundancy-aware vertex-centric graph processing"};
  cli.require_subcommand(1);

  slfe::RunConfig run_config;
  std::string run_rr = "on";
  bool run_oracle = false;
  CLI::App* run_cmd = cli.add_subcommand("run", "execute one application");
  add_run_flags(run_cmd, run_config, run_rr);
  run_cmd->add_flag("--oracle", run_oracle,
                    "verify the result against the reference implementation");

  slfe::RunConfig cmp_config;
  std::string cmp_rr_unused = "on";
  std::string rr_a = "on", rr_b = "off", curves;
  CLI::App* cmp_cmd =
      cli.add_subcommand("compare", "paired run (defaults: rr on vs off)");
  add_run_flags(cmp_cmd, cmp_config, cmp_rr_unused);
  cmp_cmd->add_option("--rr-a", rr_a, "redundancy reduction for run A");
  cmp_cmd->add_option("--rr-b", rr_b, "redundancy reduction for run B");
  cmp_cmd->add_option("--curves", curves, "per-iteration computations CSV");

  CLI::App* gen_cmd = cli.add_subcommand("gen", "write a fixture edge list");
  bool gen_worked_example = false;
  uint32_t gen_scale = 0, gen_ef = 16;
  uint64_t gen_seed = 1;
  std::string gen_out, gen_format = "text";
  bool gen_weighted = false;
  gen_cmd->add_flag("--worked-example", gen_worked_example, "the six-vertex worked example");
  gen_cmd->add_option("--rmat-scale", gen_scale, "rmat scale (2^scale vertices)");
  gen_cmd->add_option("--edge-factor", gen_ef, "rmat edges per vertex");
  gen_cmd->add_option("--seed", gen_seed, "rmat seed");
  gen_cmd->add_option("--format", gen_format, "text or binary");
  gen_cmd->add_flag("--weighted", gen_weighted, "emit the weight column");
  gen_cmd->add_option("--out", gen_out, "output path")->required();

  CLI11_PARSE(cli, argc, argv);

  try {
    if (run_cmd->parsed()) {
      run_config.rr = parse_rr(run_rr);
      run_config.run_oracle = run_oracle;
      return run_command(run_config);
    }
    if (cmp_cmd->parsed()) {
      return compare_command(cmp_config, rr_a, rr_b, curves);
    }
    if (gen_cmd->parsed()) {
      std::vector<slfe::Edge> edges;
      if (gen_worked_example) {
        edges = slfe::worked_example_edges();
        gen_weighted = true;
      } else {
        slfe::RmatParams params;
        params.scale = gen_scale;
        params.edge_factor = gen_ef;
        params.seed = gen_seed;
        edges = slfe::generate_rmat(params);
      }
      slfe::EdgeListFormat format;
      format.kind = gen_format == "binary" ? slfe::EdgeListFormat::Kind::Binary
                                           : slfe::EdgeListFormat::Kind::Text;
      format.weighted = gen_weighted;
      slfe::save_edge_list(gen_out, edges, format);
      std::printf("wrote %zu edges to %s\n", edges.size(), gen_out.c_str());
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
