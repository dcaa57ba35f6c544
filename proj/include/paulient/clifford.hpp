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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "paulient/dense.hpp"
#include "paulient/pauli.hpp"
#include "paulient/rng.hpp"

namespace paulient {

/// Result of conjugating a Hermitian Pauli string through a Clifford:
/// C P C^dagger = sign * result, with result Hermitian and phase 0.
struct SignedPauli {
  PauliString result;
  int sign;  // +1 or -1
};

/// Clifford unitary modulo global phase, stored as the signed images of the
/// generators: x_image(i) = C X_i C^dagger, z_image(i) = C Z_i C^dagger. Every
/// image is a Hermitian Pauli string (phase 0 or 2) and the images preserve
/// the anticommutation pattern of the generators.
class CliffordTableau {
 public:
  static CliffordTableau identity(int n_qubits);
  static CliffordTableau hadamard(int n_qubits, int q);
  static CliffordTableau phase_s(int n_qubits, int q);
  static CliffordTableau cnot(int n_qubits, int control, int target);

  int n_qubits() const { return n_; }
  const PauliString& x_image(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const PauliString& z_image(int i) const { return images_[static_cast<std::size_t>(n_ + i)]; }
  /// Generator order X_0..X_{N-1}, Z_0..Z_{N-1}.
  const std::vector<PauliString>& images() const { return images_; }

  /// 2N x 2N binary matrix; row r holds the (x bits by site, z bits by site)
  /// of the image of generator r.
  std::vector<std::vector<std::uint8_t>> symplectic_matrix() const;
  /// Sign bit per generator image (1 means -1).
  std::vector<std::uint8_t> sign_bits() const;

  bool preserves_symplectic_form() const;

  SignedPauli conjugate(const PauliString& p) const;
  /// General form for strings with arbitrary phase.
  PauliString conjugate_with_phase(const PauliString& p) const;

  CliffordTableau inverse() const;
  /// Apply this first, then `next`: the tableau of next * this.
  CliffordTableau then(const CliffordTableau& next) const;

  /// Plain-text block:  "tableau N", 2N rows "xbits zbits sign", "end".
  std::string to_text() const;
  static CliffordTableau from_text(const std::string& text);

  friend bool operator==(const CliffordTableau&, const CliffordTableau&) = default;

 private:
  friend CliffordTableau clifford_from_generator_images(const std::vector<SignedPauli>& images);
  CliffordTableau(int n, std::vector<PauliString> images) : n_(n), images_(std::move(images)) {}

  int n_;
  std::vector<PauliString> images_;
};

SignedPauli clifford_conjugate_pauli(const CliffordTableau& c, const PauliString& p);

/// Images for X_1..X_N then Z_1..Z_N. Throws InvalidGeneratorImages when the
/// images are not Hermitian or do not preserve the symplectic form.
CliffordTableau clifford_from_generator_images(const std::vector<SignedPauli>& images);

/// Exactly uniform over Clifford unitaries modulo phase: a uniform symplectic
/// matrix (sequential uniform choice of symplectic pairs) times uniform signs.
CliffordTableau clifford_random(int n_qubits, RngStream& rng);

/// A unitary realizing the tableau, with global phase fixed so that the first
/// nonzero entry of column 0 is real positive.
DenseOperator clifford_to_dense(const CliffordTableau& c, int max_qubits = kDefaultDenseLimit);

}  // namespace paulient
