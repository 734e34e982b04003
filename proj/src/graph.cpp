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

#include "slfe/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>
#include <string>

#include "slfe/errors.hpp"

namespace slfe {

namespace {

// Sorts one CSR row by neighbor id; equal ids keep insertion order.
void sort_row(VertexId* ids, double* weights, size_t len) {
  if (len < 2) return;
  std::vector<uint32_t> perm(len);
  std::iota(perm.begin(), perm.end(), 0u);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](uint32_t a, uint32_t b) { return ids[a] < ids[b]; });
  std::vector<VertexId> tmp_ids(len);
  std::vector<double> tmp_w(len);
  for (size_t i = 0; i < len; ++i) {
    tmp_ids[i] = ids[perm[i]];
    tmp_w[i] = weights[perm[i]];
  }
  std::memcpy(ids, tmp_ids.data(), len * sizeof(VertexId));
  std::memcpy(weights, tmp_w.data(), len * sizeof(double));
}

void fill_csr(uint32_t num_vertices, const std::vector<Edge>& edges, bool by_src,
              std::vector<uint64_t>& offsets, std::vector<VertexId>& neighbors,
              std::vector<double>& weights) {
  offsets.assign(num_vertices + 1, 0);
  for (const Edge& e : edges) {
    ++offsets[(by_src ? e.src : e.dst) + 1];
  }
  for (uint32_t v = 0; v < num_vertices; ++v) {
    offsets[v + 1] += offsets[v];
  }
  neighbors.resize(edges.size());
  weights.resize(edges.size());
  std::vector<uint64_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : edges) {
    uint32_t key = by_src ? e.src : e.dst;
    uint64_t pos = cursor[key]++;
    neighbors[pos] = by_src ? e.dst : e.src;
    weights[pos] = e.weight;
  }
  for (uint32_t v = 0; v < num_vertices; ++v) {
    sort_row(neighbors.data() + offsets[v], weights.data() + offsets[v],
             offsets[v + 1] - offsets[v]);
  }
}

uint64_t fnv1a(uint64_t h, const void* data, size_t len) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Graph Graph::build(uint32_t num_vertices, const std::vector<Edge>& edges) {
  Graph g;
  g.num_vertices_ = num_vertices;
  g.num_edges_ = edges.size();
  for (const Edge& e : edges) {
    if (e.src >= num_vertices || e.dst >= num_vertices) {
      throw FormatError("edge endpoint out of range: " + std::to_string(e.src) +
                        " -> " + std::to_string(e.dst) + " with " +
                        std::to_string(num_vertices) + " vertices");
    }
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) {
      throw DomainError("edge weight must be finite and non-negative, got " +
                        std::to_string(e.weight));
    }
    if (e.weight != 1.0) g.weighted_ = true;
  }
  fill_csr(num_vertices, edges, true, g.out_offsets_, g.out_targets_,
           g.out_weights_);
  fill_csr(num_vertices, edges, false, g.in_offsets_, g.in_sources_,
           g.in_weights_);
  g.out_degrees_.resize(num_vertices);
  for (uint32_t v = 0; v < num_vertices; ++v) {
    g.out_degrees_[v] =
        static_cast<uint32_t>(g.out_offsets_[v + 1] - g.out_offsets_[v]);
  }
  return g;
}

void Graph::check_vertex(VertexId v) const {
  if (v >= num_vertices_) {
    throw ArgumentError("vertex id " + std::to_string(v) +
                        " out of range (graph has " +
                        std::to_string(num_vertices_) + " vertices)");
  }
}

Graph::Row Graph::out_row(VertexId v) const {
  check_vertex(v);
  uint64_t begin = out_offsets_[v];
  return Row{out_targets_.data() + begin, out_weights_.data() + begin,
             static_cast<size_t>(out_offsets_[v + 1] - begin)};
}

Graph::Row Graph::in_row(VertexId v) const {
  check_vertex(v);
  uint64_t begin = in_offsets_[v];
  return Row{in_sources_.data() + begin, in_weights_.data() + begin,
             static_cast<size_t>(in_offsets_[v + 1] - begin)};
}

uint64_t Graph::out_degree(VertexId v) const {
  check_vertex(v);
  return out_offsets_[v + 1] - out_offsets_[v];
}

uint64_t Graph::in_degree(VertexId v) const {
  check_vertex(v);
  return in_offsets_[v + 1] - in_offsets_[v];
}

std::pair<uint64_t, uint64_t> Graph::degree_views(VertexId v) const {
  return {in_degree(v), out_degree(v)};
}

uint64_t Graph::fingerprint() const {
  uint64_t h = 0xcbf29ce484222325ULL;
  uint64_t header[2] = {num_vertices_, num_edges_};
  h = fnv1a(h, header, sizeof(header));
  h = fnv1a(h, out_offsets_.data(), out_offsets_.size() * sizeof(uint64_t));
  h = fnv1a(h, out_targets_.data(), out_targets_.size() * sizeof(VertexId));
  h = fnv1a(h, out_weights_.data(), out_weights_.size() * sizeof(double));
  return h;
}

Graph symmetrize(const Graph& g) {
  std::vector<Edge> edges;
  edges.reserve(2 * g.num_edges());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    Graph::Row row = g.out_row(v);
    for (size_t i = 0; i < row.len; ++i) {
      edges.push_back(Edge{v, row.ids[i], row.weights[i]});
      edges.push_back(Edge{row.ids[i], v, row.weights[i]});
    }
  }
  return Graph::build(g.num_vertices(), edges);
}

}  // namespace slfe
