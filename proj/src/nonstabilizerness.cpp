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

#include "paulient/nonstabilizerness.hpp"

#include <cmath>
#include <string>

#include "paulient/error.hpp"
#include "paulient/kernels.hpp"
#include "paulient/parallel.hpp"
#include "paulient/pauli_transform.hpp"

namespace paulient {

namespace {

// Renyi or Shannon functional of a probability vector, in bits.
double renyi_of_distribution(const std::vector<double>& xi, double alpha) {
  CompensatedSum acc;
  if (std::abs(alpha - 1.0) < 1e-12) {
    for (double p : xi) {
      if (p > 1e-300) acc.add(-p * std::log2(p));
    }
    return acc.value();
  }
  for (double p : xi) {
    if (p > 0.0) acc.add(std::pow(p, alpha));
  }
  return std::log2(acc.value()) / (1.0 - alpha);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

}  // namespace

double stabilizer_renyi_entropy_unchecked(const Vector& amplitudes, double alpha) {
  if (!(alpha > 0.0)) throw InvalidArgument("stabilizer Renyi index must be positive");
  const std::vector<double> ev = pauli_expectations(amplitudes);
  const double d = static_cast<double>(amplitudes.size());
  std::vector<double> xi(ev.size());
  for (std::size_t i = 0; i < ev.size(); ++i) xi[i] = ev[i] * ev[i] / d;
  return renyi_of_distribution(xi, alpha) - std::log2(d);
}

double stabilizer_renyi_entropy(const StateVector& psi, double alpha) {
  return stabilizer_renyi_entropy_unchecked(psi.amplitudes(), alpha);
}

std::pair<double, LocalUnitarySearchReport> nonlocal_stabilizer_entropy(const StateVector& psi,
                                                                        const Bipartition& bp, double alpha,
                                                                        const SearchConfig& config) {
  if (psi.n_qubits() != bp.n()) throw DimensionMismatch("state and bipartition sizes differ");
  if (bp.n() > 6) throw SizeLimitExceeded("nonlocal_stabilizer_entropy is limited to N <= 6");
  const Vector& amps = psi.amplitudes();
  auto objective = [&](const std::vector<Matrix>& locals) {
    return stabilizer_renyi_entropy_unchecked(kron(locals[0], locals[1]) * amps, alpha);
  };
  LocalUnitarySearchReport report = minimize_over_local_unitaries({bp.n_a, bp.n_b}, objective, config);
  return {report.best_value, std::move(report)};
}

double operator_magic_linear_unchecked(const Matrix& o) {
  const std::vector<cplx> c = pauli_coefficients(o);
  const double d = static_cast<double>(o.rows());
  return 1.0 - simd::active_kernels().sum_abs4(c.data(), c.size()) / (d * d * d * d);
}

double operator_stabilizer_entropy(const DenseOperator& o, OperatorMagicMeasure measure) {
  require_unitary(o, 1e-8, "operator_stabilizer_entropy");
  if (measure.linear) return operator_magic_linear_unchecked(o.matrix());
  if (!(measure.alpha > 0.0)) throw InvalidArgument("operator stabilizer entropy index must be positive");
  const std::vector<cplx> c = pauli_coefficients(o.matrix());
  const double d2 = static_cast<double>(o.dim() * o.dim());
  std::vector<double> xi(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) xi[i] = std::norm(c[i]) / d2;
  return renyi_of_distribution(xi, measure.alpha);
}

double operator_coherence_2(const DenseOperator& u) {
  require_unitary(u, 1e-8, "operator_coherence_2");
  const double d = static_cast<double>(u.dim());
  const Matrix state = u.matrix() / std::sqrt(d);
  const std::vector<cplx> amps = pauli_coefficients(state);  // Tr(P U/sqrt(d)) = sqrt(d) <<P/sqrt(d)|U/sqrt(d)>>
  CompensatedSum acc;
  for (const cplx& a : amps) {
    const double p = std::norm(a) / d;
    acc.add(p * p);
  }
  return 1.0 - acc.value();
}

std::pair<double, LocalUnitarySearchReport> local_min_operator_magic(const DenseOperator& u, const Bipartition& bp,
                                                                     const SearchConfig& config, int max_qubits) {
  require_qubits(u, bp, "local_min_operator_magic");
  check_dense_limit(u.n_qubits(), max_qubits, "local_min_operator_magic");
  require_unitary(u, 1e-8, "local_min_operator_magic");
  const Matrix& m = u.matrix();
  auto objective = [&](const std::vector<Matrix>& l) {
    return operator_magic_linear_unchecked(kron(l[0], l[1]) * m * kron(l[2], l[3]));
  };
  LocalUnitarySearchReport report =
      minimize_over_local_unitaries({bp.n_a, bp.n_b, bp.n_a, bp.n_b}, objective, config);
  return {report.best_value, std::move(report)};
}

}  // namespace paulient
