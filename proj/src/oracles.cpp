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

#include "slfe/oracles.hpp"

#include <algorithm>
#include <queue>
#include <utility>

#include "slfe/errors.hpp"

namespace slfe::oracles {

std::vector<double> dijkstra(const Graph& g, VertexId root) {
  g.check_vertex(root);
  const uint32_t n = g.num_vertices();
  for (VertexId v = 0; v < n; ++v) {
    Graph::Row row = g.out_row(v);
    for (size_t i = 0; i < row.len; ++i) {
      if (row.weights[i] < 0.0) {
        throw DomainError("dijkstra requires non-negative weights");
      }
    }
  }
  std::vector<double> dist(n, kMaxDistance);
  dist[root] = 0.0;
  using Item = std::pair<double, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  heap.push({0.0, root});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    Graph::Row row = g.out_row(u);
    for (size_t i = 0; i < row.len; ++i) {
      double nd = d + row.weights[i];
      if (nd < dist[row.ids[i]]) {
        dist[row.ids[i]] = nd;
        heap.push({nd, row.ids[i]});
      }
    }
  }
  return dist;
}

namespace {

class DisjointSet {
 public:
  explicit DisjointSet(uint32_t n) : parent_(n), rank_(n, 0) {
    for (uint32_t i = 0; i < n; ++i) parent_[i] = i;
  }
  uint32_t find(uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<uint32_t> parent_;
  std::vector<uint8_t> rank_;
};

}  // namespace

std::vector<double> union_find_cc(const Graph& g) {
  const uint32_t n = g.num_vertices();
  DisjointSet dsu(n);
  for (VertexId v = 0; v < n; ++v) {
    Graph::Row row = g.out_row(v);
    for (size_t i = 0; i < row.len; ++i) dsu.unite(v, row.ids[i]);
  }
  std::vector<uint32_t> min_id(n, 0xFFFFFFFFu);
  for (VertexId v = 0; v < n; ++v) {
    uint32_t r = dsu.find(v);
    min_id[r] = std::min(min_id[r], v);
  }
  std::vector<double> labels(n);
  for (VertexId v = 0; v < n; ++v) {
    labels[v] = static_cast<double>(min_id[dsu.find(v)]);
  }
  return labels;
}

namespace {

void widest_dfs(const Graph& g, VertexId v, double bottleneck,
                std::vector<uint8_t>& on_path, std::vector<double>& best) {
  if (bottleneck > best[v]) best[v] = bottleneck;
  on_path[v] = 1;
  Graph::Row row = g.out_row(v);
  for (size_t i = 0; i < row.len; ++i) {
    VertexId u = row.ids[i];
    if (on_path[u]) continue;
    widest_dfs(g, u, std::min(bottleneck, row.weights[i]), on_path, best);
  }
  on_path[v] = 0;
}

}  // namespace

std::vector<double> widest_bruteforce(const Graph& g, VertexId root) {
  g.check_vertex(root);
  if (g.num_vertices() > 32) {
    throw ArgumentError("widest_bruteforce is limited to 32 vertices");
  }
  std::vector<double> best(g.num_vertices(), 0.0);
  std::vector<uint8_t> on_path(g.num_vertices(), 0);
  best[root] = kMaxDistance;
  on_path[root] = 1;
  Graph::Row row = g.out_row(root);
  for (size_t i = 0; i < row.len; ++i) {
    if (row.ids[i] == root) continue;
    widest_dfs(g, row.ids[i], row.weights[i], on_path, best);
  }
  return best;
}

std::vector<double> widest_dijkstra(const Graph& g, VertexId root) {
  g.check_vertex(root);
  const uint32_t n = g.num_vertices();
  std::vector<double> width(n, 0.0);
  width[root] = kMaxDistance;
  using Item = std::pair<double, VertexId>;
  std::priority_queue<Item> heap;  // widest first
  heap.push({kMaxDistance, root});
  while (!heap.empty()) {
    auto [w, u] = heap.top();
    heap.pop();
    if (w < width[u]) continue;
    Graph::Row row = g.out_row(u);
    for (size_t i = 0; i < row.len; ++i) {
      double nw = std::min(w, row.weights[i]);
      if (nw > width[row.ids[i]]) {
        width[row.ids[i]] = nw;
        heap.push({nw, row.ids[i]});
      }
    }
  }
  return width;
}

std::vector<double> power_iteration_pr(const Graph& g, uint32_t iterations,
                                       double damp_base, double damp_factor) {
  const uint32_t n = g.num_vertices();
  if (n == 0) return {};
  std::vector<double> ranks(n, 1.0 / static_cast<double>(n));
  std::vector<double> snapshot(n);
  for (uint32_t it = 0; it < iterations; ++it) {
    snapshot = ranks;
    for (VertexId v = 0; v < n; ++v) {
      Graph::Row row = g.in_row(v);
      if (row.len == 0) continue;
      double sum = 0.0;
      for (size_t i = 0; i < row.len; ++i) sum += snapshot[row.ids[i]];
      ranks[v] = sum;
    }
    for (VertexId v = 0; v < n; ++v) {
      double nv = damp_base + damp_factor * ranks[v];
      uint32_t deg = g.out_degrees()[v];
      if (deg > 0) nv /= static_cast<double>(deg);
      ranks[v] = nv;
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    uint32_t deg = g.out_degrees()[v];
    if (deg > 0) ranks[v] *= static_cast<double>(deg);
  }
  return ranks;
}

std::vector<double> tunk_fixed_point(const Graph& g, uint32_t iterations,
                                     double p) {
  const uint32_t n = g.num_vertices();
  std::vector<double> influence(n, 0.0);
  std::vector<double> snapshot(n);
  for (uint32_t it = 0; it < iterations; ++it) {
    snapshot = influence;
    for (VertexId v = 0; v < n; ++v) {
      Graph::Row row = g.in_row(v);
      if (row.len == 0) continue;
      double sum = 0.0;
      for (size_t i = 0; i < row.len; ++i) {
        VertexId u = row.ids[i];
        sum += (1.0 + p * snapshot[u]) /
               static_cast<double>(g.out_degrees()[u]);
      }
      influence[v] = sum;
    }
  }
  return influence;
}

}  // namespace slfe::oracles
