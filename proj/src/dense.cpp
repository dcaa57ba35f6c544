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

#include "paulient/dense.hpp"

#include <Eigen/Eigenvalues>
#include <string>

#include "paulient/error.hpp"

namespace paulient {

namespace {
bool is_power_of_two_dim(Eigen::Index rows, int n_qubits) {
  return n_qubits >= 0 && n_qubits < 31 && rows == (Eigen::Index{1} << n_qubits);
}
}  // namespace

DenseOperator::DenseOperator(int n_qubits, Matrix matrix) : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || !is_power_of_two_dim(matrix_.rows(), n_qubits)) {
    throw DimensionMismatch("matrix of shape " + std::to_string(matrix_.rows()) + "x" +
                            std::to_string(matrix_.cols()) + " is not 2^" + std::to_string(n_qubits) +
                            " square");
  }
}

DenseOperator DenseOperator::identity(int n_qubits) {
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  return {n_qubits, Matrix::Identity(d, d)};
}

DenseOperator DenseOperator::kron(const DenseOperator& other) const {
  const Eigen::Index da = matrix_.rows();
  const Eigen::Index db = other.matrix_.rows();
  Matrix out(da * db, da * db);
  for (Eigen::Index j = 0; j < da; ++j) {
    for (Eigen::Index i = 0; i < da; ++i) {
      out.block(i * db, j * db, db, db) = matrix_(i, j) * other.matrix_;
    }
  }
  return {n_qubits_ + other.n_qubits_, std::move(out)};
}

double DenseOperator::unitarity_error() const {
  const Matrix g = matrix_.adjoint() * matrix_;
  return (g - Matrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

double DenseOperator::hermiticity_error() const {
  return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
}

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
  if (a.n_qubits_ != b.n_qubits_) {
    throw DimensionMismatch("product of operators on " + std::to_string(a.n_qubits_) + " and " +
                            std::to_string(b.n_qubits_) + " qubits");
  }
  return {a.n_qubits_, a.matrix_ * b.matrix_};
}

Bipartition::Bipartition(int na, int nb) : n_a(na), n_b(nb) {
  if (na < 1 || nb < 1) {
    throw InvalidArgument("bipartition needs at least one qubit on each side, got " + std::to_string(na) + "|" +
                          std::to_string(nb));
  }
}

StateVector::StateVector(int n_qubits, Vector amplitudes) : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (!is_power_of_two_dim(amps_.size(), n_qubits)) {
    throw DimensionMismatch("state of length " + std::to_string(amps_.size()) + " on " + std::to_string(n_qubits) +
                            " qubits");
  }
  if (std::abs(amps_.norm() - 1.0) > 1e-10) {
    throw NotNormalized("state norm " + std::to_string(amps_.norm()));
  }
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  Vector v = Vector::Zero(Eigen::Index{1} << n_qubits);
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return {n_qubits, std::move(v)};
}

StateVector StateVector::evolved(const DenseOperator& u) const {
  if (u.n_qubits() != n_qubits_) throw DimensionMismatch("operator and state qubit counts differ");
  Vector v = u.matrix() * amps_;
  v.normalize();
  return {n_qubits_, std::move(v)};
}

void check_dense_limit(int n_qubits, int max_qubits, std::string_view what) {
  if (n_qubits > max_qubits) {
    throw SizeLimitExceeded(std::string(what) + ": " + std::to_string(n_qubits) + " qubits exceeds the dense limit of " +
                            std::to_string(max_qubits));
  }
}

void require_unitary(const DenseOperator& u, double tol, std::string_view what) {
  const double err = u.unitarity_error();
  if (!(err <= tol)) {
    throw NotUnitary(std::string(what) + ": |U^dagger U - 1|_max = " + std::to_string(err));
  }
}

void require_qubits(const DenseOperator& o, const Bipartition& bp, std::string_view what) {
  if (o.n_qubits() != bp.n()) {
    throw DimensionMismatch(std::string(what) + ": operator on " + std::to_string(o.n_qubits()) +
                            " qubits, bipartition " + std::to_string(bp.n_a) + "|" + std::to_string(bp.n_b));
  }
}

Matrix expm_hermitian(const Matrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const Eigen::VectorXd& e = es.eigenvalues();
  Vector phases(e.size());
  for (Eigen::Index i = 0; i < e.size(); ++i) phases(i) = std::polar(1.0, -t * e(i));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace paulient
