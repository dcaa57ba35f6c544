// Copyright 2026 The paulient Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"
#include "paulient/kernels.hpp"

namespace paulient::simd {

const KernelTable* avx2_kernels() {
#if defined(__x86_64__) || defined(_M_X64)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? detail::avx2_table_unchecked() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() {
  static const KernelTable& table = [] () -> const KernelTable& {
    const char* env = std::getenv("PAULIENT_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_kernels();
    if (const KernelTable* t = avx2_kernels()) return *t;
    return scalar_kernels();
  }();
  return table;
}

void fwht_blocks(const KernelTable& k, cplx* data, std::size_t n, std::size_t block) {
  for (std::size_t h = 1; h < n; h *= 2) {
    for (std::size_t i = 0; i < n; i += 2 * h) {
      k.butterfly(data + i * block, data + (i + h) * block, h * block);
    }
  }
}

}  // namespace paulient::simd
