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

#include "paulient/error.hpp"
#include "paulient/pauli_power.hpp"
#include "test_util.hpp"

namespace paulient {
namespace {

using testing::xx_rotation;

double exact(const DenseOperator& u, const Bipartition& bp, ExactRoute route = ExactRoute::kAuto) {
  return pauli_entangling_power_exact(u, bp, {8, route}).value;
}

TEST(PauliPowerExact, ClosedFormRotation) {
  for (auto route : {ExactRoute::kAuto, ExactRoute::kPerPauli, ExactRoute::kLocalCoefficients, ExactRoute::kGramBlocks}) {
    EXPECT_NEAR(exact(xx_rotation(), {1, 1}, route), 0.25, 1e-12);
  }
  // sin^2(4 theta) / 4 for exp(-i theta XX).
  for (double theta : {0.1, 0.3, 0.7}) {
    const DenseOperator u{2, expm_hermitian(testing::dense(PauliString::from_string("XX")), theta)};
    EXPECT_NEAR(exact(u, {1, 1}), std::pow(std::sin(4 * theta), 2) / 4, 1e-12);
  }
}

TEST(PauliPowerExact, CliffordsAndLocalsVanish) {
  RngStream rng(1);
  for (int n = 2; n <= 5; ++n) {
    const Bipartition bp{1, n - 1};
    EXPECT_NEAR(exact(clifford_to_dense(clifford_random(n, rng)), bp), 0.0, 1e-12);
    EXPECT_NEAR(exact(testing::random_local(bp, rng), bp), 0.0, 1e-12);
  }
}

TEST(PauliPowerExact, RoutesAgree) {
  RngStream rng(2);
  for (int n = 2; n <= 5; ++n) {
    for (int na = 1; na < n; ++na) {
      const Bipartition bp{na, n - na};
      const DenseOperator u = haar_random_unitary(n, rng);
      const double ref = exact(u, bp, ExactRoute::kPerPauli);
      EXPECT_NEAR(exact(u, bp, ExactRoute::kLocalCoefficients), ref, 1e-12);
      EXPECT_NEAR(exact(u, bp, ExactRoute::kGramBlocks), ref, 1e-12);
      EXPECT_GE(ref, 0.0);
      EXPECT_LT(ref, 1.0);
    }
  }
}

TEST(PauliPowerExact, ErrorsAndBudget) {
  EXPECT_THROW(exact({2, 2.0 * Matrix::Identity(4, 4)}, {1, 1}), NotUnitary);
  EXPECT_THROW(pauli_entangling_power_exact(DenseOperator::identity(9), {4, 5}), SizeLimitExceeded);
  EXPECT_THROW(exact(DenseOperator::identity(3), {1, 1}), DimensionMismatch);
}

TEST(PauliPowerExact, CliffordAndLocalInvariance) {
  RngStream rng(3);
  const Bipartition bp{1, 2};
  for (int t = 0; t < 5; ++t) {
    const DenseOperator u = haar_random_unitary(3, rng);
    const DenseOperator moved = clifford_to_dense(clifford_random(3, rng)) * u * testing::random_local(bp, rng);
    EXPECT_NEAR(exact(moved, bp), exact(u, bp), 1e-10);
  }
}

TEST(PauliPowerExact, EvolvedPauliEntanglementDefinition) {
  RngStream rng(4);
  const DenseOperator u = haar_random_unitary(2, rng);
  double sum = 0.0;
  for (const PauliString& p : enumerate_paulis(2)) sum += evolved_pauli_entanglement(u, {1, 1}, p);
  EXPECT_NEAR(sum / 16.0, exact(u, {1, 1}), 1e-12);
}

TEST(PauliPowerSampled, ConsistentWithExact) {
  RngStream rng(5);
  int outside = 0;
  for (int t = 0; t < 20; ++t) {
    const DenseOperator u = haar_random_unitary(4, rng);
    const Bipartition bp{2, 2};
    RngStream srng = rng.split(static_cast<std::uint64_t>(t));
    SamplingOptions opts;
    opts.fixed_count = 4000;
    const PauliPowerEstimate est = pauli_entangling_power_sampled(u, bp, srng, opts);
    EXPECT_EQ(est.mode, PowerMode::kSampled);
    EXPECT_GT(est.n_samples, 1u);
    if (std::abs(est.value - exact(u, bp)) > 3 * est.sem) ++outside;
  }
  EXPECT_LE(outside, 1);
}

TEST(PauliPowerSampled, FixedCountAndDeterminism) {
  RngStream a(6), b(6);
  SamplingOptions o;
  o.fixed_count = 500;
  const DenseOperator u = xx_rotation();
  const auto ea = pauli_entangling_power_sampled(u, {1, 1}, a, o);
  const auto eb = pauli_entangling_power_sampled(u, {1, 1}, b, o);
  EXPECT_EQ(ea.n_samples, 500u);
  EXPECT_EQ(ea.value, eb.value);
  EXPECT_EQ(ea.sem, eb.sem);
}

TEST(QProjector, OneQubit) {
  const Matrix q = q_projector_build(1);
  EXPECT_NEAR(q.trace().real(), 4.0, 1e-12);
  EXPECT_NEAR((q * q - q).norm(), 0.0, 1e-12);
  const Matrix basis = q_supplemental_basis(1);
  EXPECT_NEAR((basis.adjoint() * basis - Matrix::Identity(basis.cols(), basis.cols())).norm(), 0.0, 1e-12);
  EXPECT_NEAR((q * basis - basis).norm(), 0.0, 1e-12);
}

TEST(QProjector, TwoQubitsMatchesLambdaConstruction) {
  const Matrix q = q_projector_build(2);
  EXPECT_NEAR((q - q_projector_from_lambda(2)).cwiseAbs().maxCoeff(), 0.0, 1e-12);
  EXPECT_NEAR(q.trace().real(), 16.0, 1e-12);
  EXPECT_NEAR((q * q - q).norm(), 0.0, 1e-10);
  EXPECT_THROW(q_projector_build(3), SizeLimitExceeded);
}

TEST(PauliPowerViaQ, MatchesExact) {
  EXPECT_NEAR(pauli_power_via_q(xx_rotation(), {1, 1}), 0.25, 1e-10);
  RngStream rng(7);
  EXPECT_NEAR(pauli_power_via_q(clifford_to_dense(clifford_random(2, rng)), {1, 1}), 0.0, 1e-10);
  for (int t = 0; t < 20; ++t) {
    const DenseOperator u = haar_random_unitary(2, rng);
    EXPECT_NEAR(pauli_power_via_q(u, {1, 1}), exact(u, {1, 1}, ExactRoute::kPerPauli), 1e-10);
  }
}

TEST(LocalMagicBound, Examples) {
  const LocalMagicBounds b = local_pauli_magic_bound(xx_rotation(), {1, 1});
  EXPECT_NEAR(b.bound_a, 0.25, 1e-10);
  EXPECT_NEAR(b.bound_b, 0.25, 1e-10);
  RngStream rng(8);
  const LocalMagicBounds c = local_pauli_magic_bound(clifford_to_dense(clifford_random(3, rng)), {1, 2});
  EXPECT_NEAR(c.bound_a, 0.0, 1e-12);
  EXPECT_NEAR(c.bound_b, 0.0, 1e-12);
  for (int t = 0; t < 50; ++t) {
    const int n = 3 + t % 2;
    const Bipartition bp{1 + t % (n - 1), n - 1 - t % (n - 1)};
    const DenseOperator u = haar_random_unitary(n, rng);
    EXPECT_GE(local_pauli_magic_bound(u, bp).min(), exact(u, bp) - 1e-10);
  }
}

TEST(HaarTypical, ClosedForms) {
  EXPECT_NEAR(haar_typical_value(4, 2).value, 27.0 / 56.0, 1e-15);
  EXPECT_NEAR(haar_typical_value(16, 4).value, 885600.0 / 1011712.0, 1e-15);
  for (std::uint64_t d : {1u << 10, 1u << 16}) {
    const auto da = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(d)));
    EXPECT_NEAR(haar_typical_value(d, da).value, 1.0 - 2.0 / static_cast<double>(d), 4.0 / (double(d) * double(d)));
  }
  EXPECT_THROW(haar_typical_value(16, 3), InvalidArgument);
  EXPECT_THROW(haar_typical_value(16, 32), InvalidArgument);
}

TEST(HaarMonteCarlo, SmallCaseWithinThreeSem) {
  const HaarMonteCarlo mc = haar_pauli_power_monte_carlo({1, 1}, 300, RngStream(9));
  EXPECT_NEAR(mc.mean, 27.0 / 56.0, 3 * mc.sem);
}

TEST(PermutationTraces, SupplementalTable) {
  for (int n : {1, 2}) {
    const double d = std::pow(2.0, n);
    const auto t = q_permutation_traces(n);
    const std::array<double, 5> want{d * d, d, d * d, 1.0, d};
    for (int i = 0; i < 5; ++i) EXPECT_NEAR(t[i], want[i], 1e-10) << s4_class_name(kS4Classes[i]);
  }
}

}  // namespace
}  // namespace paulient
