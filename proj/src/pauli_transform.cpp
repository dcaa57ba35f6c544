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

#include "paulient/pauli_transform.hpp"

#include <bit>
#include <string>

#include "paulient/error.hpp"
#include "paulient/kernels.hpp"
#include "paulient/parallel.hpp"

namespace paulient {

int qubits_of(const Eigen::Ref<const Matrix>& m) {
  const auto rows = static_cast<std::uint64_t>(m.rows());
  if (m.rows() != m.cols() || rows == 0 || !std::has_single_bit(rows)) {
    throw DimensionMismatch("expected a square power-of-two matrix, got " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()));
  }
  return std::countr_zero(rows);
}

std::vector<cplx> pauli_coefficients(const Eigen::Ref<const Matrix>& o) {
  std::vector<cplx> out;
  pauli_coefficients_into(o, out);
  return out;
}

void pauli_coefficients_into(const Eigen::Ref<const Matrix>& o, std::vector<cplx>& data) {
  const int n = qubits_of(o);
  pauli_count(n);  // enforces the enumeration budget
  const std::size_t d = std::size_t{1} << n;
  // Row b of the work array holds w_x(b) = O[b, b^x] for every shift x. The
  // block transform over rows then yields entry (z, x) = sum_b (-1)^{z.b} w_x(b),
  // which is already in index order x | z << N.
  data.resize(d * d);
  parallel_blocks(d, [&](std::size_t b) {
    cplx* row = data.data() + b * d;
    for (std::size_t x = 0; x < d; ++x) row[x] = o(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b ^ x));
  });
  simd::fwht_blocks(simd::active_kernels(), data.data(), d, d);
  parallel_blocks(d, [&](std::size_t z) {
    cplx* row = data.data() + z * d;
    for (std::size_t x = 0; x < d; ++x) row[x] *= i_pow(std::popcount(x & z));
  });
}

std::vector<double> pauli_expectations(const Vector& psi) {
  const auto size = static_cast<std::uint64_t>(psi.size());
  if (size == 0 || !std::has_single_bit(size)) throw DimensionMismatch("state length is not a power of two");
  const int n = std::countr_zero(size);
  pauli_count(n);
  const std::size_t d = size;
  std::vector<cplx> data(d * d);
  for (std::size_t b = 0; b < d; ++b) {
    cplx* row = data.data() + b * d;
    for (std::size_t x = 0; x < d; ++x) {
      row[x] = std::conj(psi(static_cast<Eigen::Index>(b ^ x))) * psi(static_cast<Eigen::Index>(b));
    }
  }
  simd::fwht_blocks(simd::active_kernels(), data.data(), d, d);
  std::vector<double> out(d * d);
  for (std::size_t z = 0; z < d; ++z) {
    for (std::size_t x = 0; x < d; ++x) out[z * d + x] = (data[z * d + x] * i_pow(std::popcount(x & z))).real();
  }
  return out;
}

cplx pauli_trace(const Matrix& o, const PauliString& p) {
  if (qubits_of(o) != p.n_qubits()) throw DimensionMismatch("operator and Pauli string sizes differ");
  cplx acc = 0.0;
  for (Eigen::Index b = 0; b < o.rows(); ++b) {
    const auto [b2, s] = p.act_on_basis(static_cast<std::uint64_t>(b));
    acc += s * o(b, static_cast<Eigen::Index>(b2));
  }
  return acc;
}

}  // namespace paulient
