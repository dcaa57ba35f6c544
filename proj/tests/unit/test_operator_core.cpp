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

#include <gtest/gtest.h>

#include <Eigen/SVD>

#include "paulient/error.hpp"
#include "paulient/operator_entanglement.hpp"
#include "paulient/pauli_transform.hpp"
#include "test_util.hpp"

namespace paulient {
namespace {

using testing::cnot;
using testing::dense;
using testing::swap_gate;

Eigen::VectorXd singular_values(const Matrix& m) { return Eigen::JacobiSVD<Matrix>(m).singularValues(); }

TEST(Bipartition, Dimensions) {
  const Bipartition bp{2, 3};
  EXPECT_EQ(bp.n(), 5);
  EXPECT_EQ(bp.d(), 32u);
  EXPECT_EQ(bp.d_a(), 4u);
  EXPECT_EQ(bp.d_b(), 8u);
  EXPECT_EQ(Bipartition::half(5).n_a, 2);
}

TEST(DenseOperator, RejectsNonPowerOfTwo) {
  EXPECT_THROW(DenseOperator(1, Matrix::Identity(3, 3)), DimensionMismatch);
}

TEST(Realign, ProductHasRankOne) {
  RngStream rng(1);
  const DenseOperator o = testing::random_local({1, 1}, rng);
  const Eigen::VectorXd s = singular_values(realign(o, {1, 1}));
  EXPECT_NEAR(s(0), 1.0, 1e-12);
  EXPECT_NEAR(s(1), 0.0, 1e-12);
}

TEST(Realign, SwapAndCnot) {
  const Eigen::VectorXd s = singular_values(realign(DenseOperator(2, swap_gate()), {1, 1}));
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(s(i), 0.5, 1e-12);
  const Eigen::VectorXd c = singular_values(realign(DenseOperator(2, cnot()), {1, 1}));
  EXPECT_NEAR(c(0), std::sqrt(0.5), 1e-12);
  EXPECT_NEAR(c(1), std::sqrt(0.5), 1e-12);
  EXPECT_NEAR(c(2), 0.0, 1e-12);
}

TEST(Realign, ShapeAndMismatch) {
  const Matrix r = realign(DenseOperator::identity(3), {1, 2});
  EXPECT_EQ(r.rows(), 4);
  EXPECT_EQ(r.cols(), 16);
  EXPECT_THROW(realign(DenseOperator::identity(3), {1, 1}), DimensionMismatch);
}

TEST(SchmidtSpectrum, Examples) {
  auto s = operator_schmidt_spectrum(pauli_to_dense(PauliString::from_string("XZY")), {1, 2});
  ASSERT_GE(s.lambdas.size(), 1u);
  EXPECT_NEAR(s.lambdas[0], 1.0, 1e-12);
  for (std::size_t i = 1; i < s.lambdas.size(); ++i) EXPECT_NEAR(s.lambdas[i], 0.0, 1e-12);
  s = operator_schmidt_spectrum({2, swap_gate()}, {1, 1});
  for (double l : s.lambdas) EXPECT_NEAR(l, 0.25, 1e-12);
  s = operator_schmidt_spectrum({2, cnot()}, {1, 1});
  EXPECT_NEAR(s.lambdas[0], 0.5, 1e-12);
  EXPECT_NEAR(s.lambdas[1], 0.5, 1e-12);
}

TEST(SchmidtSpectrum, NormalizedSortedBounded) {
  RngStream rng(2);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 3;
    const Bipartition bp{1 + t % (n - 1), n - 1 - t % (n - 1)};
    const SchmidtSpectrum s = operator_schmidt_spectrum(haar_random_unitary(n, rng), bp);
    EXPECT_NEAR(s.sum(), 1.0, 1e-10);
    EXPECT_LE(s.lambdas.size(), std::min(bp.d_a() * bp.d_a(), bp.d_b() * bp.d_b()));
    for (std::size_t i = 1; i < s.lambdas.size(); ++i) EXPECT_GE(s.lambdas[i - 1], s.lambdas[i]);
  }
}

TEST(OperatorEntanglement, Examples) {
  EXPECT_NEAR(operator_entanglement(pauli_to_dense(PauliString::from_string("XZ")), {1, 1}), 0.0, 1e-12);
  EXPECT_NEAR(operator_entanglement({2, swap_gate()}, {1, 1}), 0.75, 1e-12);
  EXPECT_NEAR(operator_entanglement({2, swap_gate()}, {1, 1}, EntanglementMeasure::renyi(2)), 2.0, 1e-12);
  EXPECT_NEAR(operator_entanglement({2, cnot()}, {1, 1}), 0.5, 1e-12);
  EXPECT_NEAR(operator_entanglement({2, cnot()}, {1, 1}, EntanglementMeasure::renyi(1)), 1.0, 1e-12);
  EXPECT_NEAR(operator_entanglement({2, cnot()}, {1, 1}, EntanglementMeasure::schmidt_rank()), 2.0, 0.0);
}

TEST(OperatorEntanglement, NonUnitaryRejectedForEntropies) {
  const DenseOperator o{2, 2.0 * Matrix::Identity(4, 4)};
  EXPECT_THROW(operator_entanglement(o, {1, 1}), NotUnitary);
  EXPECT_NEAR(operator_entanglement(o, {1, 1}, EntanglementMeasure::schmidt_rank()), 1.0, 0.0);
}

TEST(OperatorEntanglement, LocalUnitaryInvariance) {
  RngStream rng(3);
  for (int n = 2; n <= 4; ++n) {
    const Bipartition bp = Bipartition::half(n);
    const DenseOperator u = haar_random_unitary(n, rng);
    const DenseOperator w = testing::random_local(bp, rng) * u * testing::random_local(bp, rng);
    const auto a = operator_schmidt_spectrum(u, bp).lambdas;
    const auto b = operator_schmidt_spectrum(w, bp).lambdas;
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-10);
    for (auto m : {EntanglementMeasure::linear(), EntanglementMeasure::renyi(0.5), EntanglementMeasure::renyi(1),
                   EntanglementMeasure::renyi(3)}) {
      EXPECT_NEAR(operator_entanglement(u, bp, m), operator_entanglement(w, bp, m), 1e-9);
    }
  }
}

TEST(OperatorEntanglement, RenyiOrderingAndRange) {
  RngStream rng(4);
  for (int t = 0; t < 20; ++t) {
    const DenseOperator u = haar_random_unitary(3, rng);
    const Bipartition bp{1, 2};
    const double lin = operator_entanglement(u, bp);
    const double e2 = operator_entanglement(u, bp, EntanglementMeasure::renyi(2));
    EXPECT_NEAR(e2, -std::log2(1.0 - lin), 1e-10);
    for (double a : {0.5, 1.0, 1.5}) EXPECT_GE(operator_entanglement(u, bp, EntanglementMeasure::renyi(a)), e2 - 1e-12);
    EXPECT_GE(lin, 0.0);
    EXPECT_LE(lin, 1.0 - 1.0 / 4.0 + 1e-12);
  }
}

TEST(Haar, UnitaryAndSeeded) {
  RngStream a(5), b(5);
  const DenseOperator u = haar_random_unitary(3, a);
  EXPECT_LT(u.unitarity_error(), 1e-12);
  EXPECT_EQ(u.matrix(), haar_random_unitary(3, b).matrix());
}

TEST(Haar, SecondMomentOfTrace) {
  RngStream rng(6);
  const int draws = 10000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double v = std::norm(haar_unitary_matrix(8, rng).trace());
    sum += v;
    sum_sq += v * v;
  }
  const double mean = sum / draws;
  const double sem = std::sqrt((sum_sq / draws - mean * mean) / draws);
  EXPECT_NEAR(mean, 1.0, 5 * sem);
}

TEST(ExpmHermitian, MatchesClosedForm) {
  const Matrix z = dense(PauliString::from_string("Z"));
  const Matrix u = expm_hermitian(z, M_PI / 2);
  EXPECT_NEAR(std::abs(u(0, 0) - std::polar(1.0, -M_PI / 2)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(u(1, 1) - std::polar(1.0, M_PI / 2)), 0.0, 1e-12);
}

TEST(PauliTransform, MatchesTraces) {
  RngStream rng(7);
  const Matrix o = haar_random_unitary(3, rng).matrix();
  const std::vector<cplx> c = pauli_coefficients(o);
  ASSERT_EQ(c.size(), 64u);
  for (std::uint64_t i = 0; i < 64; ++i) {
    const PauliString p = PauliString::from_index(3, i);
    EXPECT_NEAR(std::abs(c[i] - (o * dense(p)).trace()), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(c[i] - pauli_trace(o, p)), 0.0, 1e-12);
  }
}

TEST(PauliTransform, StateExpectations) {
  RngStream rng(8);
  const Vector psi = haar_random_unitary(3, rng).matrix().col(0);
  const std::vector<double> e = pauli_expectations(psi);
  for (std::uint64_t i = 0; i < 64; ++i) {
    const cplx ref = psi.dot(dense(PauliString::from_index(3, i)) * psi);
    EXPECT_NEAR(e[i], ref.real(), 1e-12);
  }
}

}  // namespace
}  // namespace paulient
