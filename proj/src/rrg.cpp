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

#include "slfe/rrg.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <fstream>
#include <unordered_set>

#include "slfe/errors.hpp"

namespace slfe {

namespace {

constexpr char kMagic[9] = "SLFERRG1";
constexpr uint32_t kUnreachedLevel = 0xFFFFFFFFu;

void put_u32(std::ostream& out, uint32_t v) {
  unsigned char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 4);
}

void put_u64(std::ostream& out, uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 8);
}

bool get_bytes(std::istream& in, void* dst, size_t len) {
  in.read(static_cast<char*>(dst), static_cast<std::streamsize>(len));
  return static_cast<size_t>(in.gcount()) == len;
}

bool get_u32(std::istream& in, uint32_t& v) {
  unsigned char b[4];
  if (!get_bytes(in, b, 4)) return false;
  v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(b[i]) << (8 * i);
  return true;
}

bool get_u64(std::istream& in, uint64_t& v) {
  unsigned char b[8];
  if (!get_bytes(in, b, 8)) return false;
  v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[i]) << (8 * i);
  return true;
}

}  // namespace

uint32_t RRGuidance::max_last_iter() const {
  uint32_t m = 0;
  for (const RRGRecord& r : records) m = std::max(m, r.last_iter);
  return m;
}

SourceSet SourceSet::of(const Graph& g, std::vector<VertexId> roots) {
  if (roots.empty()) throw ArgumentError("source set must be non-empty");
  std::unordered_set<VertexId> seen;
  for (VertexId v : roots) {
    g.check_vertex(v);
    if (!seen.insert(v).second) {
      throw ArgumentError("duplicate source vertex " + std::to_string(v));
    }
  }
  return SourceSet{std::move(roots)};
}

RRGuidance generate_rrg(const Graph& g, const SourceSet& sources) {
  const uint32_t n = g.num_vertices();
  RRGuidance rrg;
  rrg.records.assign(n, RRGRecord{});
  rrg.sources = sources.roots;
  rrg.graph_fingerprint = g.fingerprint();
  rrg.graph_vertices = n;
  rrg.graph_edges = g.num_edges();

  std::vector<uint32_t> dist(n, kUnreachedLevel);
  std::vector<VertexId> frontier, next_frontier;

  for (VertexId root : sources.roots) {
    dist[root] = 0;
    rrg.records[root].visited = 1;
    frontier.push_back(root);
  }

  // Source-side sweep of the round's active set; each destination an active
  // vertex feeds receives exactly one update notification per round (the
  // lastIter guard collapses duplicates).
  uint32_t iter = 0;
  while (!frontier.empty()) {
    ++iter;
    next_frontier.clear();
    for (VertexId u : frontier) {
      Graph::Row row = g.out_row(u);
      for (size_t i = 0; i < row.len; ++i) {
        VertexId v = row.ids[i];
        RRGRecord& rec = rrg.records[v];
        if (rec.last_iter < iter) rec.last_iter = iter;
        if (!rec.visited) {
          dist[v] = iter;  // unit weights: the first visit is the shortest level
          rec.visited = 1;
          ++rrg.dist_assignments;
          next_frontier.push_back(v);
        }
      }
    }
    frontier.swap(next_frontier);
  }
  rrg.rounds = iter;
  return rrg;
}

RRGuidance rrg_oracle(const Graph& g, const SourceSet& sources) {
  const uint32_t n = g.num_vertices();
  RRGuidance rrg;
  rrg.records.assign(n, RRGRecord{});
  rrg.sources = sources.roots;
  rrg.graph_fingerprint = g.fingerprint();
  rrg.graph_vertices = n;
  rrg.graph_edges = g.num_edges();

  std::vector<uint32_t> level(n, kUnreachedLevel);
  std::deque<VertexId> queue;
  for (VertexId root : sources.roots) {
    level[root] = 0;
    queue.push_back(root);
  }
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    Graph::Row row = g.out_row(u);
    for (size_t i = 0; i < row.len; ++i) {
      VertexId v = row.ids[i];
      if (level[v] == kUnreachedLevel) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (level[v] == kUnreachedLevel) continue;
    rrg.records[v].visited = 1;
    uint32_t best = 0;
    bool any = false;
    Graph::Row row = g.in_row(v);
    for (size_t i = 0; i < row.len; ++i) {
      VertexId u = row.ids[i];
      if (level[u] != kUnreachedLevel) {
        best = std::max(best, level[u] + 1);
        any = true;
      }
    }
    rrg.records[v].last_iter = any ? best : 0;
  }
  return rrg;
}

void save_rrg(const std::string& path, const RRGuidance& rrg) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open " + path + " for writing");
  out.write(kMagic, 8);
  put_u64(out, rrg.graph_vertices);
  put_u64(out, rrg.graph_edges);
  put_u64(out, rrg.graph_fingerprint);
  put_u32(out, static_cast<uint32_t>(rrg.sources.size()));
  for (VertexId s : rrg.sources) put_u32(out, s);
  for (const RRGRecord& rec : rrg.records) {
    out.put(static_cast<char>(rec.visited));
    put_u32(out, rec.last_iter);
  }
  if (!out) throw FormatError("short write to " + path);
}

RRGuidance load_rrg(const std::string& path, const Graph& g) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  char magic[8];
  if (!get_bytes(in, magic, 8) || std::memcmp(magic, kMagic, 8) != 0) {
    throw FormatError(path + ": bad magic, not a guidance file");
  }
  RRGuidance rrg;
  uint32_t source_count = 0;
  if (!get_u64(in, rrg.graph_vertices) || !get_u64(in, rrg.graph_edges) ||
      !get_u64(in, rrg.graph_fingerprint) || !get_u32(in, source_count)) {
    throw FormatError(path + ": truncated header");
  }
  if (rrg.graph_vertices != g.num_vertices() ||
      rrg.graph_edges != g.num_edges() ||
      rrg.graph_fingerprint != g.fingerprint()) {
    throw StaleGuidanceError(path + ": guidance was generated for a different graph");
  }
  rrg.sources.resize(source_count);
  for (uint32_t i = 0; i < source_count; ++i) {
    if (!get_u32(in, rrg.sources[i])) {
      throw FormatError(path + ": truncated source list");
    }
  }
  rrg.records.resize(g.num_vertices());
  for (uint64_t v = 0; v < rrg.graph_vertices; ++v) {
    char visited;
    uint32_t last_iter;
    if (!in.get(visited) || !get_u32(in, last_iter)) {
      throw FormatError(path + ": truncated records");
    }
    rrg.records[v].visited = static_cast<uint8_t>(visited);
    rrg.records[v].last_iter = last_iter;
  }
  return rrg;
}

}  // namespace slfe
