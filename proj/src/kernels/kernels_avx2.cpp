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

// Compiled with -mavx2 and selected at runtime only when the CPU supports
// it. Every kernel here must be bit-identical to its scalar reference: the
// reductions are min/max (order-exact) and all per-lane arithmetic uses
// plain add/min/max, never FMA. Gathered indices are i32, which is fine for
// the graph sizes this engine targets (< 2^31 vertices).

#include "slfe/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

namespace slfe::kernels {

double sum_source_ordered(Graph::Row row, const double* props);
double tunk_sum_ordered(Graph::Row row, const double* props,
                        const double* out_degree, double p);

namespace {

inline double hmin(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_min_pd(lo, hi);
  lo = _mm_min_sd(lo, _mm_unpackhi_pd(lo, lo));
  return _mm_cvtsd_f64(lo);
}

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_max_pd(lo, hi);
  lo = _mm_max_sd(lo, _mm_unpackhi_pd(lo, lo));
  return _mm_cvtsd_f64(lo);
}

double min_plus_avx2(Graph::Row row, const double* props) {
  __m256d best = _mm256_set1_pd(kMaxDistance);
  size_t i = 0;
  for (; i + 4 <= row.len; i += 4) {
    __m128i idx =
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(row.ids + i));
    __m256d vals = _mm256_i32gather_pd(props, idx, 8);
    __m256d w = _mm256_loadu_pd(row.weights + i);
    best = _mm256_min_pd(best, _mm256_add_pd(vals, w));
  }
  double out = hmin(best);
  for (; i < row.len; ++i) {
    double cand = props[row.ids[i]] + row.weights[i];
    if (cand < out) out = cand;
  }
  return out;
}

double min_source_avx2(Graph::Row row, const double* props) {
  __m256d best = _mm256_set1_pd(kMaxDistance);
  size_t i = 0;
  for (; i + 4 <= row.len; i += 4) {
    __m128i idx =
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(row.ids + i));
    best = _mm256_min_pd(best, _mm256_i32gather_pd(props, idx, 8));
  }
  double out = hmin(best);
  for (; i < row.len; ++i) {
    double cand = props[row.ids[i]];
    if (cand < out) out = cand;
  }
  return out;
}

double max_min_weight_avx2(Graph::Row row, const double* props) {
  __m256d best = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= row.len; i += 4) {
    __m128i idx =
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(row.ids + i));
    __m256d vals = _mm256_i32gather_pd(props, idx, 8);
    __m256d w = _mm256_loadu_pd(row.weights + i);
    best = _mm256_max_pd(best, _mm256_min_pd(vals, w));
  }
  double out = hmax(best);
  for (; i < row.len; ++i) {
    double cand = props[row.ids[i]];
    if (row.weights[i] < cand) cand = row.weights[i];
    if (cand > out) out = cand;
  }
  return out;
}

uint64_t masked_degree_sum_avx2(const uint32_t* degrees, const uint8_t* mask,
                                size_t n) {
  __m256i acc = _mm256_setzero_si256();
  const __m256i zero = _mm256_setzero_si256();
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m128i mbytes =
        _mm_loadl_epi64(reinterpret_cast<const __m128i*>(mask + i));
    __m256i m32 = _mm256_cvtepu8_epi32(mbytes);
    __m256i is_zero = _mm256_cmpeq_epi32(m32, zero);
    __m256i deg =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(degrees + i));
    __m256i kept = _mm256_andnot_si256(is_zero, deg);
    __m256i lo = _mm256_cvtepu32_epi64(_mm256_castsi256_si128(kept));
    __m256i hi = _mm256_cvtepu32_epi64(_mm256_extracti128_si256(kept, 1));
    acc = _mm256_add_epi64(acc, _mm256_add_epi64(lo, hi));
  }
  alignas(32) uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  uint64_t sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) {
    if (mask[i]) sum += degrees[i];
  }
  return sum;
}

}  // namespace

const KernelSet& avx2_kernel_table() {
  static const KernelSet set{
      "avx2",           min_plus_avx2,      min_source_avx2,
      max_min_weight_avx2, sum_source_ordered, tunk_sum_ordered,
      masked_degree_sum_avx2,
  };
  return set;
}

}  // namespace slfe::kernels

#endif  // __AVX2__
