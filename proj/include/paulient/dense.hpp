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

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace paulient {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Largest qubit count for which dense 2^N x 2^N matrices are built unless a
/// caller raises the limit explicitly.
inline constexpr int kDefaultDenseLimit = 12;

/// Square complex matrix on N qubits. Site 1 is the most significant tensor
/// factor, i.e. basis index bit (N - 1 - k) belongs to site k (0-based).
class DenseOperator {
 public:
  DenseOperator() = default;
  DenseOperator(int n_qubits, Matrix matrix);

  static DenseOperator identity(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }
  Matrix& matrix() { return matrix_; }

  DenseOperator adjoint() const { return {n_qubits_, matrix_.adjoint()}; }

  /// this (leading qubits) tensor other (trailing qubits).
  DenseOperator kron(const DenseOperator& other) const;

  /// max |(U^dagger U - 1)_{ij}|
  double unitarity_error() const;
  double hermiticity_error() const;
  bool is_unitary(double tol = 1e-8) const { return unitarity_error() <= tol; }
  bool is_hermitian(double tol = 1e-10) const { return hermiticity_error() <= tol; }

  friend DenseOperator operator*(const DenseOperator& a, const DenseOperator& b);

 private:
  int n_qubits_ = 0;
  Matrix matrix_;
};

/// Split of N qubits into a leading block A (n_a qubits) and a trailing block B.
struct Bipartition {
  int n_a = 1;
  int n_b = 1;

  Bipartition() = default;
  Bipartition(int na, int nb);

  /// A = first floor(N/2) qubits.
  static Bipartition half(int n_qubits) { return {n_qubits / 2, n_qubits - n_qubits / 2}; }

  int n() const { return n_a + n_b; }
  std::size_t d() const { return std::size_t{1} << n(); }
  std::size_t d_a() const { return std::size_t{1} << n_a; }
  std::size_t d_b() const { return std::size_t{1} << n_b; }
  Bipartition swapped() const { return {n_b, n_a}; }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// Pure state, unit norm within 1e-10.
class StateVector {
 public:
  StateVector(int n_qubits, Vector amplitudes);
  static StateVector basis(int n_qubits, std::uint64_t index);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const Vector& amplitudes() const { return amps_; }

  StateVector evolved(const DenseOperator& u) const;

 private:
  int n_qubits_;
  Vector amps_;
};

void check_dense_limit(int n_qubits, int max_qubits, std::string_view what);
void require_unitary(const DenseOperator& u, double tol, std::string_view what);
void require_qubits(const DenseOperator& o, const Bipartition& bp, std::string_view what);

/// Matrix function exp(-i t H) of a Hermitian matrix.
Matrix expm_hermitian(const Matrix& h, double t);

}  // namespace paulient
