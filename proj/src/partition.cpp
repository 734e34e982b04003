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

#include "slfe/partition.hpp"

#include <algorithm>

#include "slfe/errors.hpp"

namespace slfe {

uint32_t PartitionPlan::owner_of(VertexId v) const {
  // upper_bound lands on the first boundary > v; empty ranges share a
  // boundary value and never own anything.
  auto it = std::upper_bound(boundaries.begin() + 1, boundaries.end(), v);
  if (it == boundaries.end()) {
    throw ArgumentError("vertex id " + std::to_string(v) +
                        " outside partition plan");
  }
  return static_cast<uint32_t>(it - boundaries.begin()) - 1;
}

PartitionPlan chunk_partition(const Graph& g, uint32_t num_partitions,
                              double alpha) {
  if (num_partitions < 1) {
    throw ArgumentError("numPartitions must be >= 1");
  }
  const uint32_t n = g.num_vertices();
  double total = 0.0;
  for (VertexId v = 0; v < n; ++v) {
    total += static_cast<double>(g.out_degree(v)) + alpha;
  }

  PartitionPlan plan;
  plan.boundaries.assign(num_partitions + 1, n);
  plan.boundaries[0] = 0;
  double cum = 0.0;
  uint32_t p = 0;
  for (VertexId v = 0; v < n && p < num_partitions; ++v) {
    cum += static_cast<double>(g.out_degree(v)) + alpha;
    // Close every partition whose share target the running sum has reached.
    while (p + 1 < num_partitions + 1 &&
           cum >= total * (static_cast<double>(p) + 1.0) /
                      static_cast<double>(num_partitions)) {
      plan.boundaries[p + 1] = v + 1;
      ++p;
    }
  }
  while (p < num_partitions) {
    plan.boundaries[++p] = n;
  }
  plan.boundaries[num_partitions] = n;
  return plan;
}

}  // namespace slfe
