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

#include <vector>

#include "paulient/dense.hpp"
#include "paulient/rng.hpp"

namespace paulient {

/// Operator-Schmidt coefficients lambda_i, sorted descending.
struct SchmidtSpectrum {
  std::vector<double> lambdas;

  double sum() const;
  double max() const { return lambdas.empty() ? 0.0 : lambdas.front(); }
};

struct EntanglementMeasure {
  enum class Kind { kLinear, kRenyi, kSchmidtRank };
  Kind kind = Kind::kLinear;
  double alpha = 2.0;  // used by kRenyi
  double tol = 1e-10;  // used by kSchmidtRank, relative to lambda_max

  static EntanglementMeasure linear() { return {}; }
  static EntanglementMeasure renyi(double alpha) { return {Kind::kRenyi, alpha, 1e-10}; }
  static EntanglementMeasure schmidt_rank(double tol = 1e-10) { return {Kind::kSchmidtRank, 2.0, tol}; }
};

/// R[(a,a'),(b,b')] = O[(a,b),(a',b')] / sqrt(d), shape d_A^2 x d_B^2.
Matrix realign(const DenseOperator& o, const Bipartition& bp);
Matrix realign(const Matrix& o, const Bipartition& bp);

/// Eigenvalues of R R^dagger (or R^dagger R, whichever is smaller).
SchmidtSpectrum operator_schmidt_spectrum(const DenseOperator& o, const Bipartition& bp);
SchmidtSpectrum schmidt_spectrum_from_lambdas(std::vector<double> lambdas);

/// Entropies are in bits. Entropy measures require a unitary input (within
/// 1e-8); the Schmidt rank accepts any operator.
double operator_entanglement(const DenseOperator& o, const Bipartition& bp,
                             EntanglementMeasure measure = EntanglementMeasure::linear());

/// 1 - sum_i lambda_i^2 = 1 - ||R R^dagger||_F^2 without validation or
/// eigendecomposition; the inner-loop form used by the Pauli-power code.
double linear_entanglement_unchecked(const Matrix& o, const Bipartition& bp);

double renyi_from_spectrum(const SchmidtSpectrum& s, double alpha);

/// Haar-distributed dim x dim unitary: QR of a complex Ginibre matrix with
/// the phases of R's diagonal folded back into Q.
Matrix haar_unitary_matrix(Eigen::Index dim, RngStream& rng);
DenseOperator haar_random_unitary(int n_qubits, RngStream& rng);

}  // namespace paulient
