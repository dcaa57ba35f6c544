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
#include "paulient/mpu.hpp"
#include "paulient/pauli_power.hpp"
#include "test_util.hpp"

namespace paulient {
namespace {

std::vector<std::pair<const char*, MpuTensor>> test_tensors() {
  RngStream rng(1);
  return {{"local", mpu_library::local_gate(haar_random_unitary(1, rng).matrix())},
          {"cz", mpu_library::cz_ring()},
          {"hcz", mpu_library::hadamard_cz_ring()},
          {"thcz", mpu_library::t_hadamard_cz_ring()},
          {"shift", mpu_library::shift()}};
}

TEST(MpuToDense, LocalGateIsTensorPower) {
  const Matrix h = testing::hadamard();
  const DenseOperator u = mpu_to_dense(mpu_library::local_gate(h), 3);
  const DenseOperator hh{1, h};
  EXPECT_NEAR((u.matrix() - hh.kron(hh).kron(hh).matrix()).norm(), 0.0, 1e-12);
}

TEST(MpuToDense, CliffordAutomatonIsUnitary) {
  for (int n = 2; n <= 7; ++n) EXPECT_LT(mpu_to_dense(mpu_library::hadamard_cz_ring(), n).unitarity_error(), 1e-10);
}

TEST(MpuToDense, RandomTensorRejected) {
  RngStream rng(2);
  std::vector<cplx> data(16);
  for (auto& c : data) c = {rng.normal(), rng.normal()};
  EXPECT_THROW(mpu_to_dense(MpuTensor(2, data), 4), NotUnitaryClosure);
}

TEST(LambdaTensor, StructureAndClosure) {
  const MpuTensor pi = build_lambda_site_tensor();
  EXPECT_EQ(pi.chi(), 4);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      if (a == b) continue;
      for (int o = 0; o < 2; ++o) {
        for (int i = 0; i < 2; ++i) EXPECT_EQ(pi.at(a, b, o, i), cplx(0.0));
      }
    }
  }
  const Matrix l1 = lambda_closure(1);
  EXPECT_NEAR(l1.trace().real(), 16.0, 1e-12);
  const Matrix l2 = lambda_closure(2);
  EXPECT_NEAR((l2 - 16.0 * q_projector_build(2)).cwiseAbs().maxCoeff(), 0.0, 1e-12);
  EXPECT_NEAR((l1 - 4.0 * q_projector_build(1)).cwiseAbs().maxCoeff(), 0.0, 1e-12);
}

TEST(PauliPowerMpu, FiniteMatchesDense) {
  for (const auto& [name, a] : test_tensors()) {
    for (int n = 4; n <= 6; ++n) {
      const Bipartition bp = Bipartition::half(n);
      const double dense = pauli_entangling_power_exact(mpu_to_dense(a, n), bp).value;
      EXPECT_NEAR(pauli_power_mpu(a, bp.n_a, bp.n_b), dense, 1e-8) << name << " N=" << n;
    }
  }
}

TEST(PauliPowerMpu, CliffordAndLocalVanish) {
  RngStream rng(3);
  const MpuTensor local = mpu_library::local_gate(haar_random_unitary(1, rng).matrix());
  for (int n = 4; n <= 6; ++n) {
    EXPECT_NEAR(pauli_power_mpu(local, n / 2, n - n / 2), 0.0, 1e-10);
    EXPECT_NEAR(pauli_power_mpu(mpu_library::hadamard_cz_ring(), n / 2, n - n / 2), 0.0, 1e-10);
  }
}

TEST(PauliPowerMpu, ThermodynamicIsTheLimit) {
  const MpuTensor a = mpu_library::t_hadamard_cz_ring();
  const double limit = pauli_power_mpu(a, 1, 1, {MpuMode::kThermodynamic});
  double previous = 1e9;
  for (int k = 2; k <= 8; ++k) {
    const double residual = std::abs(pauli_power_mpu(a, k, k) - limit);
    EXPECT_LE(residual, previous + 1e-12) << k;
    previous = residual;
  }
  EXPECT_LT(previous, 1e-6);
}

TEST(PauliPowerMpu, MemoryBudget) {
  const MpuTensor big = MpuTensor::zeros(3);
  EXPECT_THROW(pauli_power_mpu(big, 2, 2), SizeLimitExceeded);
  MpuOptions tiny;
  tiny.memory_budget_bytes = 1024;
  EXPECT_THROW(pauli_power_mpu(mpu_library::cz_ring(), 2, 2, tiny), SizeLimitExceeded);
}

TEST(PauliPowerMpu, TransferMatrixShapes) {
  const TransferMatrixPair t = build_transfer_matrices(mpu_library::cz_ring());
  EXPECT_EQ(t.t_a.rows(), 256);
  EXPECT_EQ(t.t_b.cols(), 256);
}

}  // namespace
}  // namespace paulient
