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

#include "slfe/kernels.hpp"

namespace slfe::kernels {

namespace {

double min_plus_scalar(Graph::Row row, const double* props) {
  double best = kMaxDistance;
  for (size_t i = 0; i < row.len; ++i) {
    double cand = props[row.ids[i]] + row.weights[i];
    if (cand < best) best = cand;
  }
  return best;
}

double min_source_scalar(Graph::Row row, const double* props) {
  double best = kMaxDistance;
  for (size_t i = 0; i < row.len; ++i) {
    double cand = props[row.ids[i]];
    if (cand < best) best = cand;
  }
  return best;
}

double max_min_weight_scalar(Graph::Row row, const double* props) {
  double best = 0.0;
  for (size_t i = 0; i < row.len; ++i) {
    double cand = props[row.ids[i]];
    if (row.weights[i] < cand) cand = row.weights[i];
    if (cand > best) best = cand;
  }
  return best;
}

uint64_t masked_degree_sum_scalar(const uint32_t* degrees, const uint8_t* mask,
                                  size_t n) {
  uint64_t sum = 0;
  for (size_t i = 0; i < n; ++i) {
    if (mask[i]) sum += degrees[i];
  }
  return sum;
}

}  // namespace

// Order-pinned sums; shared by all backends (see KernelSet docs).
double sum_source_ordered(Graph::Row row, const double* props) {
  double sum = 0.0;
  for (size_t i = 0; i < row.len; ++i) {
    sum += props[row.ids[i]];
  }
  return sum;
}

double tunk_sum_ordered(Graph::Row row, const double* props,
                        const double* out_degree, double p) {
  double sum = 0.0;
  for (size_t i = 0; i < row.len; ++i) {
    VertexId u = row.ids[i];
    sum += (1.0 + p * props[u]) / out_degree[u];
  }
  return sum;
}

const KernelSet& scalar_kernels() {
  static const KernelSet set{
      "scalar",          min_plus_scalar,   min_source_scalar,
      max_min_weight_scalar, sum_source_ordered, tunk_sum_ordered,
      masked_degree_sum_scalar,
  };
  return set;
}

}  // namespace slfe::kernels
