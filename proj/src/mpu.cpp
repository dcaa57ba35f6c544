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

#include "paulient/mpu.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "paulient/error.hpp"
#include "paulient/pauli_power.hpp"

namespace paulient {

namespace {

// I, X, Z, Y in enumeration order.
std::array<Matrix, 4> single_qubit_paulis() {
  std::array<Matrix, 4> s;
  for (auto& m : s) m = Matrix::Zero(2, 2);
  s[0] << 1, 0, 0, 1;
  s[1] << 0, 1, 1, 0;
  s[2] << 1, 0, 0, -1;
  s[3] << 0, cplx(0, -1), cplx(0, 1), 0;
  return s;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

Matrix matrix_power(const Matrix& m, int k) {
  Matrix result = Matrix::Identity(m.rows(), m.cols());
  Matrix base = m;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

struct Dominant {
  cplx value;
  Vector right;
  Vector left;
};

Dominant dominant_pair(const Matrix& t, double gap_tolerance, const char* label) {
  auto leading = [&](const Matrix& m, cplx& value, Vector& vec) {
    Eigen::ComplexEigenSolver<Matrix> es(m);
    if (es.info() != Eigen::Success) throw DegenerateLeadingEigenvalue(std::string(label) + ": eigensolver failed");
    const Eigen::VectorXcd& ev = es.eigenvalues();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(ev.size()));
    for (Eigen::Index i = 0; i < ev.size(); ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) { return std::abs(ev(a)) > std::abs(ev(b)); });
    const double l1 = std::abs(ev(order[0]));
    const double l2 = order.size() > 1 ? std::abs(ev(order[1])) : 0.0;
    if (l2 >= l1 * (1.0 - gap_tolerance)) {
      throw DegenerateLeadingEigenvalue(std::string(label) + ": |lambda_2 / lambda_1| = " + std::to_string(l2 / l1));
    }
    value = ev(order[0]);
    vec = es.eigenvectors().col(order[0]);
  };
  Dominant d;
  cplx left_value;
  leading(t, d.value, d.right);
  leading(t.transpose(), left_value, d.left);
  return d;
}

}  // namespace

MpuTensor::MpuTensor(int chi, std::vector<cplx> data) : chi_(chi), data_(std::move(data)) {
  if (chi < 1) throw InvalidArgument("bond dimension must be positive");
  if (data_.size() != static_cast<std::size_t>(chi) * chi * 4) {
    throw DimensionMismatch("MPU tensor with chi = " + std::to_string(chi) + " needs " +
                            std::to_string(chi * chi * 4) + " entries, got " + std::to_string(data_.size()));
  }
}

MpuTensor MpuTensor::zeros(int chi) {
  return {chi, std::vector<cplx>(static_cast<std::size_t>(chi) * chi * 4, cplx(0.0))};
}

Matrix MpuTensor::bond_matrix(int out, int in) const {
  Matrix m(chi_, chi_);
  for (int l = 0; l < chi_; ++l) {
    for (int r = 0; r < chi_; ++r) m(l, r) = at(l, r, out, in);
  }
  return m;
}

MpuTensor MpuTensor::then_local(const Matrix& g) const {
  if (g.rows() != 2 || g.cols() != 2) throw DimensionMismatch("local gate must be 2x2");
  MpuTensor out = zeros(chi_);
  for (int l = 0; l < chi_; ++l) {
    for (int r = 0; r < chi_; ++r) {
      for (int o = 0; o < 2; ++o) {
        for (int i = 0; i < 2; ++i) {
          out.at(l, r, o, i) = g(o, 0) * at(l, r, 0, i) + g(o, 1) * at(l, r, 1, i);
        }
      }
    }
  }
  return out;
}

namespace mpu_library {

MpuTensor local_gate(const Matrix& u) {
  if (u.rows() != 2 || u.cols() != 2) throw DimensionMismatch("local gate must be 2x2");
  MpuTensor a = MpuTensor::zeros(1);
  for (int o = 0; o < 2; ++o) {
    for (int i = 0; i < 2; ++i) a.at(0, 0, o, i) = u(o, i);
  }
  return a;
}

MpuTensor cz_ring() {
  // The right bond carries the site's own bit; the left bond the neighbour's.
  MpuTensor a = MpuTensor::zeros(2);
  for (int l = 0; l < 2; ++l) {
    for (int o = 0; o < 2; ++o) a.at(l, o, o, o) = (l & o) ? -1.0 : 1.0;
  }
  return a;
}

MpuTensor hadamard_cz_ring() {
  Matrix h(2, 2);
  h << 1, 1, 1, -1;
  return cz_ring().then_local(h / std::sqrt(2.0));
}

MpuTensor t_hadamard_cz_ring() {
  Matrix t = Matrix::Zero(2, 2);
  t(0, 0) = 1.0;
  t(1, 1) = std::polar(1.0, M_PI / 4);
  return hadamard_cz_ring().then_local(t);
}

MpuTensor shift() {
  MpuTensor a = MpuTensor::zeros(2);
  for (int o = 0; o < 2; ++o) {
    for (int i = 0; i < 2; ++i) a.at(o, i, o, i) = 1.0;
  }
  return a;
}

}  // namespace mpu_library

Matrix mpu_closure(const MpuTensor& a, int n_sites) {
  if (n_sites < 1) throw InvalidArgument("closure needs at least one site");
  // partial[(O, I)] is the product of bond matrices for the prefix with output
  // bits O and input bits I.
  std::vector<Matrix> partial;
  for (int o = 0; o < 2; ++o) {
    for (int i = 0; i < 2; ++i) partial.push_back(a.bond_matrix(o, i));
  }
  std::array<Matrix, 4> site;
  for (int o = 0; o < 2; ++o) {
    for (int i = 0; i < 2; ++i) site[static_cast<std::size_t>(o * 2 + i)] = a.bond_matrix(o, i);
  }
  std::size_t d = 2;
  for (int k = 1; k < n_sites; ++k) {
    std::vector<Matrix> next(4 * d * d);
    for (std::size_t big_o = 0; big_o < d; ++big_o) {
      for (std::size_t big_i = 0; big_i < d; ++big_i) {
        const Matrix& p = partial[big_o * d + big_i];
        for (std::size_t o = 0; o < 2; ++o) {
          for (std::size_t i = 0; i < 2; ++i) {
            next[(2 * big_o + o) * (2 * d) + (2 * big_i + i)] = p * site[o * 2 + i];
          }
        }
      }
    }
    partial = std::move(next);
    d *= 2;
  }
  Matrix u(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t o = 0; o < d; ++o) {
    for (std::size_t i = 0; i < d; ++i) u(static_cast<Eigen::Index>(o), static_cast<Eigen::Index>(i)) = partial[o * d + i].trace();
  }
  return u;
}

DenseOperator mpu_to_dense(const MpuTensor& a, int n_sites, int max_qubits) {
  check_dense_limit(n_sites, max_qubits, "mpu_to_dense");
  DenseOperator u(n_sites, mpu_closure(a, n_sites));
  const double err = u.unitarity_error();
  if (!(err <= 1e-8)) {
    throw NotUnitaryClosure("closure on " + std::to_string(n_sites) + " sites is not unitary (error " +
                            std::to_string(err) + ")");
  }
  return u;
}

MpuTensor build_lambda_site_tensor() {
  const auto s = single_qubit_paulis();
  MpuTensor pi = MpuTensor::zeros(4);
  for (int alpha = 0; alpha < 4; ++alpha) {
    for (int o = 0; o < 2; ++o) {
      for (int i = 0; i < 2; ++i) pi.at(alpha, alpha, o, i) = s[static_cast<std::size_t>(alpha)](o, i);
    }
  }
  return pi;
}

Matrix lambda_closure(int n_sites) {
  if (n_sites < 1 || n_sites > 2) throw SizeLimitExceeded("lambda_closure is limited to N <= 2");
  const Matrix lambda = mpu_closure(build_lambda_site_tensor(), 4);
  Matrix site_major = lambda;
  for (int k = 1; k < n_sites; ++k) site_major = kron(site_major, lambda);
  return site_major_to_copy_major(site_major, n_sites);
}

TransferMatrixPair build_transfer_matrices(const MpuTensor& a) {
  const int chi = a.chi();
  const auto c2 = static_cast<Eigen::Index>(chi * chi);
  const auto c4 = c2 * c2;
  const auto s = single_qubit_paulis();
  auto A = [&](int l, int r, int o, int i) { return a.at(l, r, o, i); };
  auto Ac = [&](int l, int r, int o, int i) { return std::conj(a.at(l, r, o, i)); };

  TransferMatrixPair t{Matrix::Zero(c4 * c4, c4 * c4), Matrix::Zero(c4 * c4, c4 * c4)};
  for (const Matrix& sigma : s) {
    // F[(l' l), (r' r)] = Ac[l',r',m,j] sigma[m,n] A[l,r,n,j]
    Matrix f = Matrix::Zero(c2, c2);
    for (int lp = 0; lp < chi; ++lp)
      for (int l = 0; l < chi; ++l)
        for (int rp = 0; rp < chi; ++rp)
          for (int r = 0; r < chi; ++r) {
            cplx acc = 0.0;
            for (int m = 0; m < 2; ++m)
              for (int n = 0; n < 2; ++n)
                for (int j = 0; j < 2; ++j) acc += Ac(lp, rp, m, j) * sigma(m, n) * A(l, r, n, j);
            f(lp * chi + l, rp * chi + r) = acc;
          }
    const Matrix f2 = kron(f, f);
    t.t_b += kron(f2, f2);

    // h1[(a,b,c,d)][y][x] = Ac[a,b,m,y] sigma[m,n] A[c,d,n,x]
    // h2[(e,f,g,h)][x][y] = Ac[e,f,p,x] sigma[p,q] A[g,h,q,y]
    // G[(a c e g),(b d f h)] = sum_{x,y} h1[..][y][x] h2[..][x][y]
    const std::size_t c4s = static_cast<std::size_t>(c4);
    std::vector<std::array<cplx, 4>> h(c4s);  // shared shape for h1 and h2: [y*2 + x]
    for (int a1 = 0; a1 < chi; ++a1)
      for (int b1 = 0; b1 < chi; ++b1)
        for (int c1 = 0; c1 < chi; ++c1)
          for (int d1 = 0; d1 < chi; ++d1) {
            auto& cell = h[static_cast<std::size_t>(((a1 * chi + b1) * chi + c1) * chi + d1)];
            for (int y = 0; y < 2; ++y)
              for (int x = 0; x < 2; ++x) {
                cplx acc = 0.0;
                for (int m = 0; m < 2; ++m)
                  for (int n = 0; n < 2; ++n) acc += Ac(a1, b1, m, y) * sigma(m, n) * A(c1, d1, n, x);
                cell[static_cast<std::size_t>(y * 2 + x)] = acc;
              }
          }
    // h2 with (e,f,g,h) and entry [x][y] equals h at index [x*2 + y] of the
    // same formula with the roles of the input labels exchanged.
    Matrix g = Matrix::Zero(c4, c4);
    for (int a1 = 0; a1 < chi; ++a1)
      for (int b1 = 0; b1 < chi; ++b1)
        for (int c1 = 0; c1 < chi; ++c1)
          for (int d1 = 0; d1 < chi; ++d1) {
            const auto& h1 = h[static_cast<std::size_t>(((a1 * chi + b1) * chi + c1) * chi + d1)];
            for (int e1 = 0; e1 < chi; ++e1)
              for (int f1 = 0; f1 < chi; ++f1)
                for (int g1 = 0; g1 < chi; ++g1)
                  for (int h1i = 0; h1i < chi; ++h1i) {
                    const auto& h2 = h[static_cast<std::size_t>(((e1 * chi + f1) * chi + g1) * chi + h1i)];
                    cplx acc = 0.0;
                    for (int y = 0; y < 2; ++y)
                      for (int x = 0; x < 2; ++x) acc += h1[static_cast<std::size_t>(y * 2 + x)] * h2[static_cast<std::size_t>(x * 2 + y)];
                    const Eigen::Index row = ((a1 * chi + c1) * chi + e1) * chi + g1;
                    const Eigen::Index col = ((b1 * chi + d1) * chi + f1) * chi + h1i;
                    g(row, col) += acc;
                  }
          }
    t.t_a += kron(g, g);
  }
  return t;
}

double pauli_power_mpu(const MpuTensor& a, int n_a, int n_b, const MpuOptions& options) {
  if (n_a < 1 || n_b < 1) throw InvalidArgument("both regions need at least one site");
  const double side = std::pow(static_cast<double>(a.chi()), 8.0);
  const double bytes = 4.0 * side * side * static_cast<double>(sizeof(cplx));
  if (bytes > static_cast<double>(options.memory_budget_bytes)) {
    throw SizeLimitExceeded("transfer matrices for chi = " + std::to_string(a.chi()) + " need about " +
                            std::to_string(static_cast<long long>(bytes / (1 << 20))) + " MiB, budget is " +
                            std::to_string(options.memory_budget_bytes >> 20) + " MiB");
  }
  const TransferMatrixPair t = build_transfer_matrices(a);
  if (options.mode == MpuMode::kFinite) {
    const cplx tr = (matrix_power(t.t_a, n_a) * matrix_power(t.t_b, n_b)).trace();
    return 1.0 - tr.real() / std::pow(16.0, n_a + n_b);
  }
  const Dominant da = dominant_pair(t.t_a, options.gap_tolerance, "A transfer matrix");
  const Dominant db = dominant_pair(t.t_b, options.gap_tolerance, "B transfer matrix");
  if (std::abs(da.value - 16.0) > 1e-6 || std::abs(db.value - 16.0) > 1e-6) {
    throw NotUnitaryClosure("leading transfer eigenvalues are not 16; the tensor is not a valid MPU");
  }
  const cplx num = (da.left.transpose() * db.right)(0) * (db.left.transpose() * da.right)(0);
  const cplx den = (da.left.transpose() * da.right)(0) * (db.left.transpose() * db.right)(0);
  return 1.0 - (num / den).real();
}

}  // namespace paulient
