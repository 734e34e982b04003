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
#include <iosfwd>
#include <string>
#include <vector>

namespace slfe {

enum class Mode { Push, Pull };

const char* mode_name(Mode mode);

struct StepMetrics {
  uint32_t iteration = 0;
  Mode mode = Mode::Pull;
  // Aggregation evaluations: per destination in pull, per pushed source in
  // push.
  uint64_t computations = 0;
  // Vertices driving this iteration (after a transition reactivation in
  // push). For arithmetic apps this equals the number of vertices computed.
  uint64_t active_vertices = 0;
  uint64_t messages = 0;  // cross-partition messages
  uint64_t skipped_by_rr = 0;

  // Extra bookkeeping, not part of the CSV contract.
  uint64_t edge_relaxations = 0;  // push: out-edges relaxed
  uint64_t candidates = 0;        // pull: destinations considered
  uint64_t changed = 0;           // vertices whose property changed
  double delta = 0.0;             // arithmetic: L1 property change
};

struct MetricsLog {
  std::vector<StepMetrics> steps;
  double preprocessing_seconds = 0.0;
  double execution_seconds = 0.0;

  uint64_t total_computations() const;
  uint64_t total_skipped() const;
  uint64_t total_messages() const;
  uint64_t pull_computations() const;

  // Schema: iteration,mode,computations,active_vertices,messages,skipped_by_rr
  void write_csv(std::ostream& out) const;
  void save_csv(const std::string& path) const;
};

}  // namespace slfe
