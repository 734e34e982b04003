#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "slfe/errors.hpp"
#include "slfe/partition.hpp"

using namespace slfe;

namespace {

double partition_load(const Graph& g, VertexId first, VertexId last,
                      double alpha) {
  double load = 0.0;
  for (VertexId v = first; v < last; ++v) {
    load += static_cast<double>(g.out_degree(v)) + alpha;
  }
  return load;
}

// Minimum over all contiguous splits of the maximum partition load.
double brute_force_best_max_load(const Graph& g, uint32_t parts, double alpha) {
  const uint32_t n = g.num_vertices();
  std::vector<std::vector<double>> memo(
      parts + 1, std::vector<double>(n + 1, -1.0));
  // best[k][i]: minimal max load splitting vertices [i, n) into k parts
  auto best = [&](auto&& self, uint32_t k, uint32_t i) -> double {
    if (k == 1) return partition_load(g, i, n, alpha);
    double& slot = memo[k][i];
    if (slot >= 0.0) return slot;
    double out = partition_load(g, i, n, alpha);  // rest empty
    for (uint32_t cut = i; cut <= n; ++cut) {
      double head = partition_load(g, i, cut, alpha);
      if (head > out) break;
      out = std::min(out, std::max(head, self(self, k - 1, cut)));
    }
    return slot = out;
  };
  return best(best, parts, 0);
}

double max_partition_load(const Graph& g, const PartitionPlan& plan,
                          double alpha) {
  double worst = 0.0;
  for (uint32_t p = 0; p < plan.num_partitions(); ++p) {
    worst = std::max(worst, partition_load(g, plan.boundaries[p],
                                           plan.boundaries[p + 1], alpha));
  }
  return worst;
}

}  // namespace

TEST_CASE("chunking the worked example into two partitions") {
  Graph g = testing::worked_example_graph();
  PartitionPlan plan = chunk_partition(g, 2, 0.0);
  CHECK(plan.boundaries == std::vector<VertexId>{0, 2, 6});
  // Matches the optimum over all contiguous splits.
  CHECK(max_partition_load(g, plan, 0.0) ==
        brute_force_best_max_load(g, 2, 0.0));
  CHECK(plan.owner_of(0) == 0);
  CHECK(plan.owner_of(2) == 1);
  CHECK(plan.owner_of(5) == 1);
}

TEST_CASE("single partition covers everything") {
  Graph g = testing::worked_example_graph();
  PartitionPlan plan = chunk_partition(g, 1);
  CHECK(plan.boundaries == std::vector<VertexId>{0, 6});
}

TEST_CASE("four isolated vertices split evenly") {
  Graph g = Graph::build(4, {});
  PartitionPlan plan = chunk_partition(g, 2, 1.0);
  CHECK(plan.boundaries == std::vector<VertexId>{0, 2, 4});
}

TEST_CASE("more partitions than vertices leaves empty tails") {
  Graph g = Graph::build(2, {{0, 1, 1.0}});
  PartitionPlan plan = chunk_partition(g, 5, 1.0);
  REQUIRE(plan.boundaries.size() == 6);
  CHECK(plan.boundaries.front() == 0);
  CHECK(plan.boundaries.back() == 2);
  CHECK(std::is_sorted(plan.boundaries.begin(), plan.boundaries.end()));
}

TEST_CASE("greedy load balance bound on random graphs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    testing::RandomGraphOptions opt;
    opt.max_vertices = 64;
    Graph g = testing::random_graph(rng, opt);
    std::uniform_int_distribution<uint32_t> parts_pick(1, 6);
    uint32_t parts = parts_pick(rng);
    const double alpha = 1.0;
    PartitionPlan plan = chunk_partition(g, parts, alpha);

    REQUIRE(plan.boundaries.size() == parts + 1);
    CHECK(plan.boundaries.front() == 0);
    CHECK(plan.boundaries.back() == g.num_vertices());
    CHECK(std::is_sorted(plan.boundaries.begin(), plan.boundaries.end()));

    double total = partition_load(g, 0, g.num_vertices(), alpha);
    double max_single = 0.0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      max_single = std::max(max_single,
                            static_cast<double>(g.out_degree(v)) + alpha);
    }
    CHECK(max_partition_load(g, plan, alpha) <=
          total / parts + max_single + 1e-9);
  }
}
