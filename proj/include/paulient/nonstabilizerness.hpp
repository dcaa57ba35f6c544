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

#include <utility>

#include "paulient/dense.hpp"
#include "paulient/local_search.hpp"

namespace paulient {

/// m_alpha(psi) = log2(sum_P Xi_P^alpha) / (1 - alpha) - log2 d, Xi_P = <psi|P|psi>^2 / d.
/// alpha = 1 is the Shannon limit.
double stabilizer_renyi_entropy(const StateVector& psi, double alpha = 2.0);

/// Same, without the normalization check (used inside optimizer loops).
double stabilizer_renyi_entropy_unchecked(const Vector& amplitudes, double alpha);

/// Upper bound on the nonlocal part: min over U_A x U_B of m_alpha((U_A x U_B)|psi>).
/// Seeds in `config` are (U_A, U_B) pairs. N <= 6.
std::pair<double, LocalUnitarySearchReport> nonlocal_stabilizer_entropy(const StateVector& psi,
                                                                        const Bipartition& bp, double alpha,
                                                                        const SearchConfig& config = {});

/// Which operator stabilizer entropy to compute.
struct OperatorMagicMeasure {
  bool linear = true;
  double alpha = 2.0;

  static OperatorMagicMeasure lin() { return {}; }
  static OperatorMagicMeasure renyi(double a) { return {false, a}; }
};

/// With Xi_P = |Tr(O P)|^2 / d^2: M_lin = 1 - sum Xi_P^2 and
/// M_alpha = log2(sum Xi_P^alpha) / (1 - alpha).
double operator_stabilizer_entropy(const DenseOperator& o, OperatorMagicMeasure measure = OperatorMagicMeasure::lin());

/// M_lin without validation.
double operator_magic_linear_unchecked(const Matrix& o);

/// 2-coherence of the normalized vector U / sqrt(d) in the orthonormal operator
/// basis {P / sqrt(d)}: 1 - sum_P |<<P/sqrt(d) | U/sqrt(d)>>|^4.
double operator_coherence_2(const DenseOperator& u);

/// min over V_A, V_B, W_A, W_B of M_lin((V_A x V_B) U (W_A x W_B)). Default N <= 4.
/// Seeds are (V_A, V_B, W_A, W_B) quadruples.
std::pair<double, LocalUnitarySearchReport> local_min_operator_magic(const DenseOperator& u, const Bipartition& bp,
                                                                     const SearchConfig& config = {},
                                                                     int max_qubits = 4);

}  // namespace paulient
