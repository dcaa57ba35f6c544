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

#include <optional>

#include "paulient/clifford.hpp"
#include "paulient/dense.hpp"
#include "paulient/pauli.hpp"

namespace paulient {

struct ProductCheck {
  bool product_preserving = true;
  std::optional<PauliString> witness;  // first string whose evolution is entangled
  double witness_lambda2 = 0.0;        // its second operator-Schmidt coefficient
};

/// Tests whether U^dagger P U has operator-Schmidt rank one (lambda_2 <= tol)
/// for every Pauli string. The 2N generators are tried first, then all 4^N
/// strings in enumeration order.
ProductCheck check_pauli_product_preserving(const DenseOperator& u, const Bipartition& bp, double tol = 1e-10,
                                            int max_qubits = 6);

/// Hermitian unitaries with o = x (A) tensor y (B).
struct HermitianUnitaryFactors {
  Matrix x;
  Matrix y;
};

/// Splits a Hermitian unitary of operator-Schmidt rank one. The paired sign
/// (x, y) -> (-x, -y) is fixed by requiring the first entry of x above 1e-8 in
/// magnitude, scanning the diagonal first and then row-major, to have positive
/// real part (or zero real part and positive imaginary part).
HermitianUnitaryFactors extract_hermitian_unitary_factors(const Matrix& o, const Bipartition& bp, double tol = 1e-10);

/// Normalizes raw Schmidt factors with x_raw tensor y_raw Hermitian unitary:
/// rescale by sqrt(Tr(y^dagger y) / d_B), strip the common phase, fix the sign.
HermitianUnitaryFactors normalize_hermitian_unitary_factors(const Matrix& x_raw, const Matrix& y_raw);

/// U^dagger = global_phase * (v tensor w) * dense(c).
struct LocalCliffordFactorization {
  DenseOperator v;
  DenseOperator w;
  CliffordTableau c;
  cplx global_phase;
};

/// Recovers the factorization of a Pauli-product-preserving unitary from the
/// evolutions of its 2N generators. Throws NotProductPreserving when some
/// generator evolves to an entangled operator, FactorizationDegenerate with
/// diagnostics when the commutation structure is inconsistent.
LocalCliffordFactorization factorize(const DenseOperator& u, const Bipartition& bp, double tol = 1e-10);

struct FactorizationCheck {
  double residual = 0.0;            // ||phase (v x w) C - U^dagger||_F / sqrt(d)
  bool corollary_checked = false;   // only for N <= 4
  double max_local_magic = 0.0;     // max_P M_lin((V x W)^dagger U^dagger P U (V x W))
};

FactorizationCheck verify_factorization(const DenseOperator& u, const LocalCliffordFactorization& f);

DenseOperator factorization_to_dense(const LocalCliffordFactorization& f);

namespace detail {

/// phi(k1, k2) = Tr(Y_{k2} Y_{k1} Y_{k1 o k2}) / d_B.
cplx cocycle_phi(const Matrix& y1, const Matrix& y2, const Matrix& y12);

Matrix partial_trace_b(const Matrix& o, const Bipartition& bp);
Matrix partial_trace_a(const Matrix& o, const Bipartition& bp);

/// Unitary V with V X_i V^dagger = xs[i] and V Z_i V^dagger = zs[i], for
/// Hermitian unitaries obeying the single-qubit Pauli relations. Column s is
/// prod_i xs[i]^{s_i} v0 with v0 the joint +1 eigenvector of the zs.
Matrix unitary_from_pauli_images(const std::vector<Matrix>& xs, const std::vector<Matrix>& zs);

}  // namespace detail

}  // namespace paulient
