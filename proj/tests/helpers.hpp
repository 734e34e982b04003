// Shared test fixtures: the worked six-vertex example and random graph
// generators with deterministic seeds.
#pragma once

#include <algorithm>
#include <memory>
#include <random>
#include <vector>

#include "slfe/driver.hpp"
#include "slfe/graph.hpp"

namespace slfe::testing {

inline Graph worked_example_graph() { return Graph::build(6, worked_example_edges()); }

inline std::shared_ptr<const Graph> worked_example_shared() {
  return std::make_shared<Graph>(worked_example_graph());
}

struct RandomGraphOptions {
  uint32_t max_vertices = 64;
  double max_edge_factor = 3.0;  // edges up to factor * vertices
  bool weighted = true;
  bool acyclic = false;  // only edges u -> v with u < v
};

// Weights are multiples of 0.25 in [0, 8]; mixes zero weights in.
inline std::vector<Edge> random_edges(std::mt19937_64& rng, uint32_t n,
                                      const RandomGraphOptions& opt) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  uint64_t m = static_cast<uint64_t>(uni(rng) * opt.max_edge_factor *
                                     static_cast<double>(n));
  std::uniform_int_distribution<uint32_t> pick(0, n - 1);
  std::uniform_int_distribution<int> wpick(0, 32);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (uint64_t i = 0; i < m; ++i) {
    uint32_t a = pick(rng), b = pick(rng);
    if (opt.acyclic) {
      if (a == b) continue;
      if (a > b) std::swap(a, b);
    }
    double w = opt.weighted ? 0.25 * wpick(rng) : 1.0;
    edges.push_back(Edge{a, b, w});
  }
  return edges;
}

inline Graph random_graph(std::mt19937_64& rng,
                          const RandomGraphOptions& opt = {}) {
  std::uniform_int_distribution<uint32_t> size(1, opt.max_vertices);
  uint32_t n = size(rng);
  return Graph::build(n, random_edges(rng, n, opt));
}

}  // namespace slfe::testing
