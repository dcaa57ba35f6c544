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

#pragma once

// Data-parallel inner loops used by the Pauli transforms, the Schmidt Gram
// matrices and the Pauli-power reductions. Every kernel has a portable scalar
// reference and, on x86-64, an AVX2/FMA variant. The active table is picked
// once at runtime from CPUID; setting PAULIENT_SIMD=scalar forces the
// reference path.

#include <complex>
#include <cstddef>
#include <string_view>

namespace paulient::simd {

using cplx = std::complex<double>;

struct KernelTable {
  std::string_view name;
  // (a, b) <- (a + b, a - b), elementwise over len complex entries.
  void (*butterfly)(cplx* a, cplx* b, std::size_t len);
  // out[i] += |c[i]|^2
  void (*accumulate_abs2)(const cplx* c, double* out, std::size_t len);
  // sum |c[i]|^4
  double (*sum_abs4)(const cplx* c, std::size_t len);
  // sum v[i]^2
  double (*sum_squares)(const double* v, std::size_t len);
  // sum conj(a[i]) * b[i]
  cplx (*dot_conj)(const cplx* a, const cplx* b, std::size_t len);
};

const KernelTable& scalar_kernels();

/// nullptr when the binary was built without AVX2 support or the CPU lacks it.
const KernelTable* avx2_kernels();

const KernelTable& active_kernels();

/// Unnormalized Walsh-Hadamard transform across `n` (a power of two) blocks of
/// `block` contiguous entries: out[z] = sum_b (-1)^{popcount(z & b)} in[b],
/// applied independently to every position inside a block.
void fwht_blocks(const KernelTable& k, cplx* data, std::size_t n, std::size_t block);

inline void fwht(cplx* data, std::size_t n) { fwht_blocks(active_kernels(), data, n, 1); }

}  // namespace paulient::simd
