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

#include <cmath>

#include "paulient/clifford.hpp"
#include "paulient/dense.hpp"
#include "paulient/operator_entanglement.hpp"
#include "paulient/pauli.hpp"
#include "paulient/rng.hpp"

namespace paulient::testing {

inline Matrix dense(const PauliString& p) { return pauli_to_dense(p).matrix(); }

inline Matrix hadamard() {
  Matrix h(2, 2);
  h << 1, 1, 1, -1;
  return h / std::sqrt(2.0);
}

inline Matrix t_gate() {
  Matrix t = Matrix::Identity(2, 2);
  t(1, 1) = std::polar(1.0, M_PI / 4);
  return t;
}

inline Matrix cnot() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return m;
}

inline Matrix swap_gate() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
  return m;
}

/// exp(-i pi/8 X x X).
inline DenseOperator xx_rotation() {
  return {2, expm_hermitian(dense(PauliString::from_string("XX")), M_PI / 8)};
}

/// Local unitary on the cut bp.
inline DenseOperator random_local(const Bipartition& bp, RngStream& rng) {
  return haar_random_unitary(bp.n_a, rng).kron(haar_random_unitary(bp.n_b, rng));
}

/// U = C^dagger (V^dagger x W^dagger): the product-preserving form.
inline DenseOperator product_form_unitary(const Bipartition& bp, RngStream& rng) {
  const DenseOperator loc = random_local(bp, rng);
  return clifford_to_dense(clifford_random(bp.n(), rng)).adjoint() * loc.adjoint();
}

/// Matrices equal up to a global phase.
inline double phase_distance(const Matrix& a, const Matrix& b) {
  const cplx overlap = (b.adjoint() * a).trace();
  const cplx phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : cplx(1.0);
  return (a - phase * b).norm();
}

}  // namespace paulient::testing
