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

#include "slfe/metrics.hpp"

#include <fstream>
#include <ostream>

#include "slfe/errors.hpp"

namespace slfe {

const char* mode_name(Mode mode) {
  return mode == Mode::Push ? "push" : "pull";
}

uint64_t MetricsLog::total_computations() const {
  uint64_t sum = 0;
  for (const StepMetrics& s : steps) sum += s.computations;
  return sum;
}

uint64_t MetricsLog::total_skipped() const {
  uint64_t sum = 0;
  for (const StepMetrics& s : steps) sum += s.skipped_by_rr;
  return sum;
}

uint64_t MetricsLog::total_messages() const {
  uint64_t sum = 0;
  for (const StepMetrics& s : steps) sum += s.messages;
  return sum;
}

uint64_t MetricsLog::pull_computations() const {
  uint64_t sum = 0;
  for (const StepMetrics& s : steps) {
    if (s.mode == Mode::Pull) sum += s.computations;
  }
  return sum;
}

void MetricsLog::write_csv(std::ostream& out) const {
  out << "iteration,mode,computations,active_vertices,messages,skipped_by_rr\n";
  for (const StepMetrics& s : steps) {
    out << s.iteration << ',' << mode_name(s.mode) << ',' << s.computations
        << ',' << s.active_vertices << ',' << s.messages << ','
        << s.skipped_by_rr << '\n';
  }
}

void MetricsLog::save_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open " + path + " for writing");
  write_csv(out);
  if (!out) throw FormatError("short write to " + path);
}

}  // namespace slfe
