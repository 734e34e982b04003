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

namespace slfe {

// Contiguous vertex ranges assigned to logical nodes. boundaries has
// numPartitions + 1 entries, starts at 0, ends at numVertices,
// non-decreasing.
struct PartitionPlan {
  std::vector<VertexId> boundaries;

  uint32_t num_partitions() const {
    return static_cast<uint32_t>(boundaries.size()) - 1;
  }
  uint32_t owner_of(VertexId v) const;
};

// Greedy left-to-right chunking: partition p closes once its cumulative
// (outDegree + alpha) share reaches (p+1)/numPartitions of the total.
// Partitions beyond numVertices come out empty.
PartitionPlan chunk_partition(const Graph& g, uint32_t num_partitions,
                              double alpha = 1.0);

}  // namespace slfe
