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

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "slfe/graph.hpp"

namespace slfe {

struct EdgeListFormat {
  enum class Kind { Text, Binary };
  Kind kind = Kind::Text;
  bool weighted = false;
  char comment_prefix = '#';
};

struct EdgeList {
  uint32_t num_vertices = 0;  // 1 + max endpoint id, 0 for empty input
  std::vector<Edge> edges;
};

// Text: lines "src dst" or "src dst weight", comment/blank lines skipped,
// LF or CRLF. Binary: little-endian (u32, u32[, f32]) records.
// Unweighted edges get weight 1.0.
EdgeList parse_edge_list(std::istream& in, const EdgeListFormat& format);
EdgeList load_edge_list(const std::string& path, const EdgeListFormat& format);

void serialize_edge_list(std::ostream& out, const std::vector<Edge>& edges,
                         const EdgeListFormat& format);
void save_edge_list(const std::string& path, const std::vector<Edge>& edges,
                    const EdgeListFormat& format);

struct RmatParams {
  uint32_t scale = 0;        // 2^scale vertices; capped at 24
  uint32_t edge_factor = 0;  // edges = edge_factor * 2^scale
  uint64_t seed = 0;
  std::array<double, 4> probabilities = {0.57, 0.19, 0.19, 0.05};
};

// Plain recursive quadrant sampling, deterministic for a fixed seed.
// Probabilities must sum to 1 within 1e-9. All weights are 1.
std::vector<Edge> generate_rmat(const RmatParams& params);

}  // namespace slfe
