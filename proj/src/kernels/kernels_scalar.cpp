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

#include "paulient/kernels.hpp"

#include "kernels_impl.hpp"

namespace paulient::simd {
namespace {

void butterfly_scalar(cplx* a, cplx* b, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    const cplx u = a[i];
    const cplx v = b[i];
    a[i] = u + v;
    b[i] = u - v;
  }
}

void accumulate_abs2_scalar(const cplx* c, double* out, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) out[i] += std::norm(c[i]);
}

double sum_abs4_scalar(const cplx* c, std::size_t len) {
  double s = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    const double n = std::norm(c[i]);
    s += n * n;
  }
  return s;
}

double sum_squares_scalar(const double* v, std::size_t len) {
  double s = 0.0;
  for (std::size_t i = 0; i < len; ++i) s += v[i] * v[i];
  return s;
}

cplx dot_conj_scalar(const cplx* a, const cplx* b, std::size_t len) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar",          butterfly_scalar, accumulate_abs2_scalar,
                                 sum_abs4_scalar,   sum_squares_scalar, dot_conj_scalar};
  return table;
}

}  // namespace paulient::simd
