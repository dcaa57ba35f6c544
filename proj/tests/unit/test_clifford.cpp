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

#include <map>

#include "paulient/clifford.hpp"
#include "paulient/error.hpp"
#include "test_util.hpp"

namespace paulient {
namespace {

using testing::dense;
using testing::phase_distance;

PauliString ps(const char* s) { return PauliString::from_string(s); }

void expect_dense_agrees(const CliffordTableau& c) {
  const Matrix u = clifford_to_dense(c).matrix();
  for (const PauliString& p : enumerate_paulis(c.n_qubits())) {
    const SignedPauli r = clifford_conjugate_pauli(c, p);
    EXPECT_EQ(r.result.phase_exp(), 0);
    EXPECT_NEAR((u * dense(p) * u.adjoint() - r.sign * dense(r.result)).norm(), 0.0, 1e-10) << p.str();
  }
}

TEST(Clifford, GateExamples) {
  SignedPauli r = clifford_conjugate_pauli(CliffordTableau::hadamard(1, 0), ps("X"));
  EXPECT_EQ(r.result, ps("Z"));
  EXPECT_EQ(r.sign, 1);
  r = clifford_conjugate_pauli(CliffordTableau::cnot(2, 0, 1), ps("XI"));
  EXPECT_EQ(r.result, ps("XX"));
  EXPECT_EQ(r.sign, 1);
  r = clifford_conjugate_pauli(CliffordTableau::phase_s(1, 0), ps("X"));
  EXPECT_EQ(r.result, ps("Y"));
  EXPECT_EQ(r.sign, 1);
}

TEST(Clifford, DenseLiftOfGates) {
  EXPECT_NEAR(phase_distance(clifford_to_dense(CliffordTableau::identity(2)).matrix(), Matrix::Identity(4, 4)), 0.0,
              1e-12);
  EXPECT_NEAR(phase_distance(clifford_to_dense(CliffordTableau::hadamard(1, 0)).matrix(), testing::hadamard()), 0.0,
              1e-12);
  EXPECT_NEAR(phase_distance(clifford_to_dense(CliffordTableau::cnot(2, 0, 1)).matrix(), testing::cnot()), 0.0,
              1e-12);
}

TEST(Clifford, DenseLiftPhaseRule) {
  RngStream rng(5);
  for (int t = 0; t < 20; ++t) {
    const Matrix u = clifford_to_dense(clifford_random(3, rng)).matrix();
    Eigen::Index i = 0;
    while (std::abs(u(i, 0)) < 1e-12) ++i;
    EXPECT_NEAR(u(i, 0).imag(), 0.0, 1e-12);
    EXPECT_GT(u(i, 0).real(), 0.0);
  }
}

TEST(Clifford, FromGeneratorImages) {
  EXPECT_EQ(clifford_from_generator_images({{ps("X"), 1}, {ps("Z"), 1}}), CliffordTableau::identity(1));
  EXPECT_EQ(clifford_from_generator_images({{ps("Z"), 1}, {ps("X"), 1}}), CliffordTableau::hadamard(1, 0));
  const CliffordTableau c = clifford_from_generator_images({{ps("Y"), -1}, {ps("Z"), 1}});
  const Matrix u = clifford_to_dense(c).matrix();
  EXPECT_NEAR((u * dense(ps("X")) * u.adjoint() + dense(ps("Y"))).norm(), 0.0, 1e-12);
}

TEST(Clifford, FromGeneratorImagesRejectsBadPattern) {
  EXPECT_THROW(clifford_from_generator_images({{ps("X"), 1}, {ps("X"), 1}}), InvalidGeneratorImages);
  EXPECT_THROW(clifford_from_generator_images({{ps("XI"), 1}, {ps("IX"), 1}, {ps("ZI"), 1}, {ps("ZZ"), 1}}),
               InvalidGeneratorImages);
}

TEST(Clifford, RoundTripThroughImages) {
  RngStream rng(6);
  for (int t = 0; t < 20; ++t) {
    const CliffordTableau c = clifford_random(4, rng);
    std::vector<SignedPauli> images;
    for (int i = 0; i < 4; ++i) images.push_back(c.conjugate(PauliString::single(4, i, 'X')));
    for (int i = 0; i < 4; ++i) images.push_back(c.conjugate(PauliString::single(4, i, 'Z')));
    EXPECT_EQ(clifford_from_generator_images(images), c);
  }
}

TEST(Clifford, RandomAgreesWithDense) {
  RngStream rng(8);
  for (int n = 1; n <= 3; ++n) {
    for (int t = 0; t < 5; ++t) expect_dense_agrees(clifford_random(n, rng));
  }
  // 100 random (tableau, string) pairs at N = 4.
  for (int t = 0; t < 100; ++t) {
    const CliffordTableau c = clifford_random(4, rng);
    const PauliString p = sample_pauli(4, rng);
    const Matrix u = clifford_to_dense(c).matrix();
    const SignedPauli r = c.conjugate(p);
    EXPECT_NEAR((u * dense(p) * u.adjoint() - r.sign * dense(r.result)).norm(), 0.0, 1e-10);
  }
}

TEST(Clifford, RandomIsSeededAndSymplectic) {
  RngStream a(77), b(77);
  for (int t = 0; t < 10; ++t) {
    const CliffordTableau c = clifford_random(5, a);
    EXPECT_EQ(c, clifford_random(5, b));
    EXPECT_TRUE(c.preserves_symplectic_form());
  }
}

TEST(Clifford, SingleQubitDrawsAreUniformOverTwentyFour) {
  RngStream rng(123);
  std::map<std::string, int> freq;
  const int draws = 24000;
  for (int i = 0; i < draws; ++i) ++freq[clifford_random(1, rng).to_text()];
  ASSERT_EQ(freq.size(), 24u);
  const double expected = draws / 24.0;
  double chi2 = 0.0;
  for (const auto& [k, f] : freq) chi2 += (f - expected) * (f - expected) / expected;
  EXPECT_LT(chi2, 60.0);  // 23 degrees of freedom
}

TEST(Clifford, InverseAndComposition) {
  RngStream rng(10);
  for (int t = 0; t < 20; ++t) {
    const CliffordTableau a = clifford_random(3, rng), b = clifford_random(3, rng);
    EXPECT_EQ(a.then(a.inverse()), CliffordTableau::identity(3));
    EXPECT_EQ(a.inverse().then(a), CliffordTableau::identity(3));
    const Matrix ab = clifford_to_dense(a.then(b)).matrix();
    const Matrix ref = clifford_to_dense(b).matrix() * clifford_to_dense(a).matrix();
    EXPECT_NEAR(phase_distance(ab, ref), 0.0, 1e-10);
  }
}

TEST(Clifford, TextRoundTrip) {
  RngStream rng(11);
  const CliffordTableau c = clifford_random(4, rng);
  EXPECT_EQ(CliffordTableau::from_text(c.to_text()), c);
  EXPECT_THROW(CliffordTableau::from_text("tableau 1\n10 +\nend\n"), ParseError);
}

}  // namespace
}  // namespace paulient
