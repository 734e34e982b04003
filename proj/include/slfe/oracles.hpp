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
#include <vector>

#include "slfe/graph.hpp"

// Independent single-threaded reference implementations. These share no
// aggregation code with the engine; they exist to check it.
namespace slfe::oracles {

// Binary-heap Dijkstra; kMaxDistance for unreachable. Throws DomainError on
// a negative weight.
std::vector<double> dijkstra(const Graph& g, VertexId root);

// Union-find weak components, labels canonicalized to the component minimum.
std::vector<double> union_find_cc(const Graph& g);

// Exhaustive simple-path enumeration; only for small graphs (<= 32 vertices).
std::vector<double> widest_bruteforce(const Graph& g, VertexId root);

// Max-bottleneck Dijkstra variant; any size.
std::vector<double> widest_dijkstra(const Graph& g, VertexId root);

// Fixed-iteration power iteration with the engine's update rule and no
// redundancy machinery; returns reported (degree-multiplied) scores.
std::vector<double> power_iteration_pr(const Graph& g, uint32_t iterations,
                                       double damp_base = 0.15,
                                       double damp_factor = 0.85);

// Plain fixed-point influence iteration matching the tr app, no skipping.
std::vector<double> tunk_fixed_point(const Graph& g, uint32_t iterations,
                                     double p = 0.5);

}  // namespace slfe::oracles
