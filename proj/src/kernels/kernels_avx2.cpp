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

#include "kernels_impl.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace paulient::simd::detail {
namespace {

// Complex doubles are stored interleaved (re, im), so one __m256d holds two
// complex values. Reductions keep four independent lanes and combine them at
// the end; the result differs from the scalar reference only by reassociation.

void butterfly_avx2(cplx* a, cplx* b, std::size_t len) {
  auto* pa = reinterpret_cast<double*>(a);
  auto* pb = reinterpret_cast<double*>(b);
  const std::size_t n = 2 * len;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d u = _mm256_loadu_pd(pa + i);
    const __m256d v = _mm256_loadu_pd(pb + i);
    _mm256_storeu_pd(pa + i, _mm256_add_pd(u, v));
    _mm256_storeu_pd(pb + i, _mm256_sub_pd(u, v));
  }
  for (; i < n; ++i) {
    const double u = pa[i];
    const double v = pb[i];
    pa[i] = u + v;
    pb[i] = u - v;
  }
}

void accumulate_abs2_avx2(const cplx* c, double* out, std::size_t len) {
  const auto* pc = reinterpret_cast<const double*>(c);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256d c01 = _mm256_loadu_pd(pc + 2 * i);
    const __m256d c23 = _mm256_loadu_pd(pc + 2 * i + 4);
    const __m256d s01 = _mm256_mul_pd(c01, c01);
    const __m256d s23 = _mm256_mul_pd(c23, c23);
    // hadd -> (n0, n2, n1, n3); permute back to (n0, n1, n2, n3)
    const __m256d h = _mm256_hadd_pd(s01, s23);
    const __m256d norms = _mm256_permute4x64_pd(h, 0b11011000);
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(out + i), norms));
  }
  for (; i < len; ++i) out[i] += pc[2 * i] * pc[2 * i] + pc[2 * i + 1] * pc[2 * i + 1];
}

double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(s) + _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
}

double sum_abs4_avx2(const cplx* c, std::size_t len) {
  const auto* pc = reinterpret_cast<const double*>(c);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256d c01 = _mm256_loadu_pd(pc + 2 * i);
    const __m256d c23 = _mm256_loadu_pd(pc + 2 * i + 4);
    const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(c01, c01), _mm256_mul_pd(c23, c23));
    acc = _mm256_fmadd_pd(h, h, acc);
  }
  double s = hsum(acc);
  for (; i < len; ++i) {
    const double n = pc[2 * i] * pc[2 * i] + pc[2 * i + 1] * pc[2 * i + 1];
    s += n * n;
  }
  return s;
}

double sum_squares_avx2(const double* v, std::size_t len) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256d x = _mm256_loadu_pd(v + i);
    acc = _mm256_fmadd_pd(x, x, acc);
  }
  double s = hsum(acc);
  for (; i < len; ++i) s += v[i] * v[i];
  return s;
}

cplx dot_conj_avx2(const cplx* a, const cplx* b, std::size_t len) {
  const auto* pa = reinterpret_cast<const double*>(a);
  const auto* pb = reinterpret_cast<const double*>(b);
  // re lanes accumulate a.re*b.re + a.im*b.im, im lanes a.re*b.im - a.im*b.re.
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * i);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    acc_re = _mm256_fmadd_pd(va, vb, acc_re);
    const __m256d vb_swapped = _mm256_permute_pd(vb, 0b0101);
    acc_im = _mm256_fmadd_pd(va, vb_swapped, acc_im);
  }
  // acc_re = (ar*br, ai*bi, ...) summed; acc_im = (ar*bi, ai*br, ...)
  alignas(32) double re[4];
  alignas(32) double im[4];
  _mm256_store_pd(re, acc_re);
  _mm256_store_pd(im, acc_im);
  double sre = (re[0] + re[2]) + (re[1] + re[3]);
  double sim = (im[0] + im[2]) - (im[1] + im[3]);
  for (; i < len; ++i) {
    sre += pa[2 * i] * pb[2 * i] + pa[2 * i + 1] * pb[2 * i + 1];
    sim += pa[2 * i] * pb[2 * i + 1] - pa[2 * i + 1] * pb[2 * i];
  }
  return {sre, sim};
}

}  // namespace

const KernelTable* avx2_table_unchecked() {
  static const KernelTable table{"avx2",         butterfly_avx2,   accumulate_abs2_avx2,
                                 sum_abs4_avx2,  sum_squares_avx2, dot_conj_avx2};
  return &table;
}

}  // namespace paulient::simd::detail

#else

namespace paulient::simd::detail {
const KernelTable* avx2_table_unchecked() { return nullptr; }
}  // namespace paulient::simd::detail

#endif
