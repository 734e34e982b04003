#include <doctest.h>

#include <map>
#include <random>
#include <tuple>

#include "helpers.hpp"
#include "slfe/errors.hpp"
#include "slfe/graph.hpp"

using namespace slfe;

namespace {

using EdgeKey = std::tuple<VertexId, VertexId, double>;

std::map<EdgeKey, int> out_multiset(const Graph& g) {
  std::map<EdgeKey, int> m;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    Graph::Row row = g.out_row(v);
    for (size_t i = 0; i < row.len; ++i) {
      ++m[{v, row.ids[i], row.weights[i]}];
    }
  }
  return m;
}

std::map<EdgeKey, int> in_multiset(const Graph& g) {
  std::map<EdgeKey, int> m;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    Graph::Row row = g.in_row(v);
    for (size_t i = 0; i < row.len; ++i) {
      ++m[{row.ids[i], v, row.weights[i]}];
    }
  }
  return m;
}

}  // namespace

TEST_CASE("degree_views on the worked example") {
  Graph g = testing::worked_example_graph();
  CHECK(g.degree_views(4) == std::pair<uint64_t, uint64_t>{2, 1});
  CHECK(g.degree_views(0) == std::pair<uint64_t, uint64_t>{0, 2});
  CHECK_THROWS_AS(g.degree_views(6), ArgumentError);
}

TEST_CASE("degree_views on an isolated vertex") {
  Graph g = Graph::build(3, {});
  CHECK(g.degree_views(1) == std::pair<uint64_t, uint64_t>{0, 0});
}

TEST_CASE("degree_views on a complete directed 3-graph") {
  std::vector<Edge> edges;
  for (VertexId a = 0; a < 3; ++a) {
    for (VertexId b = 0; b < 3; ++b) {
      if (a != b) edges.push_back({a, b, 1.0});
    }
  }
  Graph g = Graph::build(3, edges);
  for (VertexId v = 0; v < 3; ++v) {
    CHECK(g.degree_views(v) == std::pair<uint64_t, uint64_t>{2, 2});
  }
}

TEST_CASE("build_dual_csr on the worked example") {
  Graph g = testing::worked_example_graph();
  CHECK(g.num_vertices() == 6);
  CHECK(g.num_edges() == 6);
  CHECK(g.weighted());
}

TEST_CASE("build_dual_csr with an empty edge list") {
  Graph g = Graph::build(3, {});
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 0);
  CHECK_FALSE(g.weighted());
}

TEST_CASE("duplicate edges are preserved") {
  Graph g = Graph::build(2, {{0, 1, 1.0}, {0, 1, 1.0}});
  CHECK(g.num_edges() == 2);
  CHECK(g.in_row(1).len == 2);
}

TEST_CASE("build rejects out-of-range endpoints and negative weights") {
  CHECK_THROWS_AS(Graph::build(2, {{0, 2, 1.0}}), FormatError);
  CHECK_THROWS_AS(Graph::build(2, {{0, 1, -1.0}}), DomainError);
}

TEST_CASE("rows are sorted by neighbor id") {
  Graph g = Graph::build(4, {{2, 3, 1}, {2, 0, 1}, {2, 1, 1}, {1, 2, 1}});
  Graph::Row row = g.out_row(2);
  REQUIRE(row.len == 3);
  CHECK(row.ids[0] == 0);
  CHECK(row.ids[1] == 1);
  CHECK(row.ids[2] == 3);
}

TEST_CASE("out and in views encode the same edge multiset") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = testing::random_graph(rng);
    CHECK(out_multiset(g) == in_multiset(g));
  }
}

TEST_CASE("degree sums equal numEdges on a large random graph") {
  std::mt19937_64 rng(11);
  testing::RandomGraphOptions opt;
  opt.max_vertices = 40000;
  Graph g = testing::random_graph(rng, opt);
  uint64_t out_sum = 0, in_sum = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out_sum += g.out_degree(v);
    in_sum += g.in_degree(v);
  }
  CHECK(out_sum == g.num_edges());
  CHECK(in_sum == g.num_edges());
}

TEST_CASE("build_dual_csr is deterministic") {
  std::mt19937_64 rng(13);
  testing::RandomGraphOptions opt;
  std::vector<Edge> edges = testing::random_edges(rng, 200, opt);
  Graph a = Graph::build(200, edges);
  Graph b = Graph::build(200, edges);
  CHECK(a.fingerprint() == b.fingerprint());
  CHECK(out_multiset(a) == out_multiset(b));
}

TEST_CASE("symmetrize doubles every edge") {
  Graph g = testing::worked_example_graph();
  Graph s = symmetrize(g);
  CHECK(s.num_edges() == 2 * g.num_edges());
  CHECK(s.in_degree(0) == s.out_degree(0));
}
