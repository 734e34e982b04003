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
#include <string>
#include <vector>

#include "slfe/graph.hpp"

namespace slfe {

// Per-vertex propagation guidance. lastIter is the last synchronous
// unit-weight round in which the vertex received an update from an active
// in-neighbor; 0 means it never did. visited marks sources and vertices
// reachable from them.
struct RRGRecord {
  uint8_t visited = 0;
  uint32_t last_iter = 0;
};

struct RRGuidance {
  std::vector<RRGRecord> records;
  std::vector<VertexId> sources;
  uint64_t graph_fingerprint = 0;
  uint64_t graph_vertices = 0;
  uint64_t graph_edges = 0;

  // Preprocessing statistics (not serialized).
  uint64_t dist_assignments = 0;
  uint32_t rounds = 0;

  uint32_t last_iter(VertexId v) const { return records[v].last_iter; }
  bool visited(VertexId v) const { return records[v].visited != 0; }
  uint32_t max_last_iter() const;
};

struct SourceSet {
  std::vector<VertexId> roots;

  // Validates non-empty, in-range, duplicate-free.
  static SourceSet of(const Graph& g, std::vector<VertexId> roots);
};

// Synchronous label-propagation preprocessing: all weights treated as 1,
// a vertex's distance is assigned at most once (visited guard), a vertex
// activated in round t is active only during round t+1. lastIter records
// the last round with at least one active in-neighbor.
RRGuidance generate_rrg(const Graph& g, const SourceSet& sources);

// Independent reference: multi-source unit-weight BFS levels, then
// lastIter(v) = 1 + max level over reachable in-neighbors of v.
RRGuidance rrg_oracle(const Graph& g, const SourceSet& sources);

// Binary format: magic "SLFERRG1", little-endian header
// (numVertices u64, numEdges u64, csrHash u64, sourceCount u32, sources u32...),
// then per-vertex (visited u8, lastIter u32).
void save_rrg(const std::string& path, const RRGuidance& rrg);

// Throws StaleGuidanceError when the file does not match `g`,
// FormatError on corrupt/truncated input.
RRGuidance load_rrg(const std::string& path, const Graph& g);

}  // namespace slfe
