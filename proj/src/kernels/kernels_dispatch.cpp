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

#include "slfe/errors.hpp"

namespace slfe::kernels {

#ifdef SLFE_HAVE_AVX2
const KernelSet& avx2_kernel_table();
#endif

bool avx2_compiled_in() {
#ifdef SLFE_HAVE_AVX2
  return true;
#else
  return false;
#endif
}

bool avx2_supported() {
#if defined(SLFE_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

const KernelSet& avx2_kernels() {
#ifdef SLFE_HAVE_AVX2
  if (!avx2_supported()) {
    throw UsageError("avx2 kernels requested but the CPU does not support avx2");
  }
  return avx2_kernel_table();
#else
  throw UsageError("avx2 kernels were not compiled into this build");
#endif
}

const KernelSet& select(Backend backend) {
  switch (backend) {
    case Backend::Scalar:
      return scalar_kernels();
    case Backend::Avx2:
      return avx2_kernels();
    case Backend::Auto:
    default:
      return avx2_supported() ? avx2_kernels() : scalar_kernels();
  }
}

Backend backend_from_string(const std::string& name) {
  if (name == "auto") return Backend::Auto;
  if (name == "scalar") return Backend::Scalar;
  if (name == "avx2") return Backend::Avx2;
  throw UsageError("unknown kernel backend '" + name +
                   "' (expected auto, scalar, or avx2)");
}

}  // namespace slfe::kernels
