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

#include <bit>
#include <complex>
#include <cstdint>
#include <ranges>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "paulient/dense.hpp"
#include "paulient/rng.hpp"

namespace paulient {

/// Pauli string i^phase * prod_k s_k with site operators s(x, z) = i^{xz} X^x Z^z,
/// so every phase-0 string is Hermitian (s(1,1) = Y).
///
/// Bits are packed into one word per component with site k at bit
/// (n_qubits - 1 - k), which makes the masks line up with computational basis
/// indices: P|b> = i^{phase + |x&z|} (-1)^{|z&b|} |b ^ x>.
class PauliString {
 public:
  static constexpr int kMaxQubits = 64;

  explicit PauliString(int n_qubits);
  PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask, int phase_exp = 0);

  /// Parses "+XIZY", "-YZ", "iX", "-i_Z" or a bare "XZ" ('_' and 'I' are identity).
  static PauliString from_string(std::string_view text);

  /// Enumeration order: x_mask = index mod 2^N, z_mask = index / 2^N. For N = 1
  /// this is I, X, Z, Y.
  static PauliString from_index(int n_qubits, std::uint64_t index);

  static PauliString single(int n_qubits, int site, char op);

  int n_qubits() const { return n_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  int phase_exp() const { return phase_; }
  std::uint64_t index() const { return x_ | (n_ == 64 ? 0 : z_ << n_); }

  bool x_at(int site) const { return (x_ >> bit(site)) & 1u; }
  bool z_at(int site) const { return (z_ >> bit(site)) & 1u; }
  char op_at(int site) const;

  bool is_hermitian() const { return phase_ % 2 == 0; }
  bool is_identity_up_to_phase() const { return x_ == 0 && z_ == 0; }
  int weight() const { return std::popcount(x_ | z_); }

  PauliString canonical() const { return {n_, x_, z_, 0}; }
  PauliString with_phase(int phase_exp) const { return {n_, x_, z_, phase_exp}; }
  PauliString negated() const { return {n_, x_, z_, phase_ + 2}; }

  /// Action on a computational basis state: returns (b', scalar) with P|b> = scalar |b'>.
  std::pair<std::uint64_t, cplx> act_on_basis(std::uint64_t b) const;

  std::string str() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  int bit(int site) const { return n_ - 1 - site; }

  int n_;
  std::uint64_t x_;
  std::uint64_t z_;
  int phase_;
};

inline cplx i_pow(int e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

struct PauliProduct {
  PauliString result;  // canonical phase-0 representative of [pq]
  int cocycle_exp;     // dense(p) dense(q) = i^cocycle_exp dense(result)
  cplx cocycle() const { return i_pow(cocycle_exp); }
};

PauliProduct pauli_multiply(const PauliString& p, const PauliString& q);

/// Symplectic form x_p.z_q + z_p.x_q mod 2 vanishes.
bool pauli_commutes(const PauliString& p, const PauliString& q);

DenseOperator pauli_to_dense(const PauliString& p, int max_qubits = kDefaultDenseLimit);

/// Dense Pauli times vector without building the matrix.
Vector apply_pauli(const PauliString& p, const Vector& v);

inline constexpr std::uint64_t kDefaultPauliBudget = std::uint64_t{1} << 24;

/// I.i.d. uniform draws from the 4^N phase-0 strings (identity included).
PauliString sample_pauli(int n_qubits, RngStream& rng);
std::vector<PauliString> sample_paulis(int n_qubits, RngStream& rng, std::size_t count);

std::uint64_t pauli_count(int n_qubits, std::uint64_t budget = kDefaultPauliBudget);

/// All 4^N phase-0 strings, identity first. Throws if 4^N > budget.
inline auto enumerate_paulis(int n_qubits, std::uint64_t budget = kDefaultPauliBudget) {
  const std::uint64_t count = pauli_count(n_qubits, budget);
  return std::views::iota(std::uint64_t{0}, count) |
         std::views::transform([n_qubits](std::uint64_t k) { return PauliString::from_index(n_qubits, k); });
}

}  // namespace paulient
