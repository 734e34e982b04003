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
#include <limits>
#include <utility>
#include <vector>

namespace slfe {

using VertexId = uint32_t;

// Finite sentinel for "unreached"; kept finite so `dist + weight` never
// produces NaN on unreached sources.
constexpr double kMaxDistance = std::numeric_limits<double>::max();

struct Edge {
  VertexId src = 0;
  VertexId dst = 0;
  double weight = 1.0;
};

// Immutable directed multigraph with dual CSR views (outgoing and incoming).
// Rows are sorted by neighbor id, ties keep input order, so traversal order
// is reproducible across runs and thread counts. Duplicate edges and
// self-loops are preserved.
class Graph {
 public:
  struct Row {
    const VertexId* ids = nullptr;
    const double* weights = nullptr;
    size_t len = 0;
  };

  // Builds both CSR views from an edge list. Endpoints must be < num_vertices
  // (FormatError) and weights finite and >= 0 (DomainError).
  static Graph build(uint32_t num_vertices, const std::vector<Edge>& edges);

  uint32_t num_vertices() const { return num_vertices_; }
  uint64_t num_edges() const { return num_edges_; }
  bool weighted() const { return weighted_; }

  Row out_row(VertexId v) const;
  Row in_row(VertexId v) const;

  uint64_t out_degree(VertexId v) const;
  uint64_t in_degree(VertexId v) const;

  // (inDegree, outDegree); throws ArgumentError on an invalid id.
  std::pair<uint64_t, uint64_t> degree_views(VertexId v) const;

  // FNV-1a over the out-CSR arrays; identifies the topology for guidance
  // caching.
  uint64_t fingerprint() const;

  const std::vector<uint32_t>& out_degrees() const { return out_degrees_; }

  void check_vertex(VertexId v) const;

 private:
  uint32_t num_vertices_ = 0;
  uint64_t num_edges_ = 0;
  bool weighted_ = false;

  std::vector<uint64_t> out_offsets_;
  std::vector<VertexId> out_targets_;
  std::vector<double> out_weights_;
  std::vector<uint32_t> out_degrees_;

  std::vector<uint64_t> in_offsets_;
  std::vector<VertexId> in_sources_;
  std::vector<double> in_weights_;
};

// Every edge doubled in both directions (used for weak-component style
// propagation). Weights are carried over unchanged.
Graph symmetrize(const Graph& g);

}  // namespace slfe
