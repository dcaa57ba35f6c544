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

#include <cstddef>
#include <vector>

#include "paulient/dense.hpp"

namespace paulient {

/// Site tensor of a uniform matrix product unitary, chi x chi x 2 x 2 with legs
/// (left bond, right bond, out, in), stored row-major in that order.
class MpuTensor {
 public:
  MpuTensor(int chi, std::vector<cplx> data);
  static MpuTensor zeros(int chi);

  int chi() const { return chi_; }
  const std::vector<cplx>& data() const { return data_; }

  cplx& at(int l, int r, int out, int in) { return data_[index(l, r, out, in)]; }
  const cplx& at(int l, int r, int out, int in) const { return data_[index(l, r, out, in)]; }

  /// The chi x chi bond matrix A^{out,in}.
  Matrix bond_matrix(int out, int in) const;

  /// Tensor of g * (site operator): A'[l,r,o,i] = sum_m g[o,m] A[l,r,m,i].
  MpuTensor then_local(const Matrix& g) const;

 private:
  std::size_t index(int l, int r, int out, int in) const {
    return ((static_cast<std::size_t>(l) * chi_ + r) * 2 + out) * 2 + in;
  }

  int chi_;
  std::vector<cplx> data_;
};

/// Ready-made tensors used by the tests and the CLI.
namespace mpu_library {
MpuTensor local_gate(const Matrix& u);  // chi = 1, closure u^{xN}
MpuTensor cz_ring();                    // chi = 2, CZ on every neighbouring pair
MpuTensor hadamard_cz_ring();           // H after the CZ ring; a Clifford cellular automaton
MpuTensor t_hadamard_cz_ring();         // T after H after the CZ ring; not Clifford
MpuTensor shift();                      // chi = 2, cyclic translation by one site
}  // namespace mpu_library

/// Periodic closure Tr(A^{o_1 i_1} ... A^{o_N i_N}); throws NotUnitaryClosure
/// if the result is not unitary within 1e-8.
DenseOperator mpu_to_dense(const MpuTensor& a, int n_sites, int max_qubits = kDefaultDenseLimit);

/// Closure without the unitarity check.
Matrix mpu_closure(const MpuTensor& a, int n_sites);

/// Pi[alpha, beta, out, in] = delta_{alpha beta} sigma_alpha[out, in], with
/// sigma = I, X, Z, Y. Its length-4 closure is Lambda = sum_sigma sigma^{x4}.
MpuTensor build_lambda_site_tensor();

/// Lambda^{xN} assembled from the Pi closures and reordered to copy-major
/// tensor order; equals d^2 Q. N <= 2.
Matrix lambda_closure(int n_sites);

/// Transfer matrices of the A region and B region, each chi^8 x chi^8.
///
/// With Ac = conj(A) and sigma over the four single-qubit Paulis, bond order
/// (conj 1, copy 1, conj 2, copy 2, conj 3, copy 3, conj 4, copy 4):
///   F_s[(l'l),(r'r)]  = Ac[l',r',m,j] s[m,n] A[l,r,n,j]
///   t_b = sum_s F_s (x) F_s (x) F_s (x) F_s
///   G_s[(a c e g),(b d f h)] = Ac[a,b,m,y] s[m,n] A[c,d,n,x] Ac[e,f,p,x] s[p,q] A[g,h,q,y]
///   t_a = sum_s G_s (x) G_s
/// so in t_a the inputs of copies 1 and 2 (and of 3 and 4) are exchanged.
struct TransferMatrixPair {
  Matrix t_a;
  Matrix t_b;
};

TransferMatrixPair build_transfer_matrices(const MpuTensor& a);

enum class MpuMode { kFinite, kThermodynamic };

struct MpuOptions {
  MpuMode mode = MpuMode::kFinite;
  std::size_t memory_budget_bytes = std::size_t{1} << 30;
  double gap_tolerance = 1e-8;
};

/// finite: 1 - Tr(t_a^{N_A} t_b^{N_B}) / 16^N.
/// thermodynamic: with (l, r) the left/right eigenvectors for the common
/// leading eigenvalue 16, 1 - (l_A.r_B)(l_B.r_A) / ((l_A.r_A)(l_B.r_B)).
double pauli_power_mpu(const MpuTensor& a, int n_a, int n_b, const MpuOptions& options = {});

}  // namespace paulient
