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

#include <cstddef>
#include <cstdint>
#include <string>

#include "slfe/graph.hpp"

namespace slfe::kernels {

// Per-destination pull aggregations over one CSR row. `props` is the
// iteration-start snapshot of the property array.
//
// The min/max reductions are reassociation-exact (no rounding depends on
// order), so they have vectorized variants. Floating-point sums are NOT:
// summation order over the sorted row is part of the results contract, so
// sum_source and tunk_sum have a single scalar implementation shared by
// every backend.
struct KernelSet {
  const char* name;

  // min over row of props[id] + weight
  double (*min_plus)(Graph::Row row, const double* props);
  // min over row of props[id]
  double (*min_source)(Graph::Row row, const double* props);
  // max over row of min(props[id], weight)
  double (*max_min_weight)(Graph::Row row, const double* props);
  // sum over row of props[id], in row order
  double (*sum_source)(Graph::Row row, const double* props);
  // sum over row of (1 + p * props[id]) / out_degree[id], in row order
  double (*tunk_sum)(Graph::Row row, const double* props,
                     const double* out_degree, double p);
  // sum of degrees[i] where mask[i] != 0
  uint64_t (*masked_degree_sum)(const uint32_t* degrees, const uint8_t* mask,
                                size_t n);
};

enum class Backend { Auto, Scalar, Avx2 };

const KernelSet& scalar_kernels();

bool avx2_supported();       // CPU capability at runtime
bool avx2_compiled_in();     // build carries the AVX2 translation unit
const KernelSet& avx2_kernels();  // throws UsageError when unavailable

// Auto resolves to AVX2 when compiled in and supported, else scalar.
const KernelSet& select(Backend backend);

Backend backend_from_string(const std::string& name);

}  // namespace slfe::kernels
