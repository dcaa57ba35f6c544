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

#include "paulient/theorem1.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "paulient/error.hpp"
#include "paulient/nonstabilizerness.hpp"
#include "paulient/operator_entanglement.hpp"
#include "paulient/pauli_power.hpp"

namespace paulient {

namespace {

constexpr double kOperatorTol = 1e-8;

// Generator r is X_r for r < N and Z_{r-N} otherwise; a GF(2) vector over the
// generators is a uint64 with bit r set when generator r participates.
PauliString string_of_vector(int n, std::uint64_t v) {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (int r = 0; r < 2 * n; ++r) {
    if (!((v >> r) & 1u)) continue;
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - (r % n));
    (r < n ? x : z) |= bit;
  }
  return {n, x, z, 0};
}

std::vector<std::uint64_t> gf2_nullspace(std::vector<std::uint64_t> rows, int n_cols) {
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int c = 0; c < n_cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && !((rows[p] >> c) & 1u)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && ((rows[r] >> c) & 1u)) rows[r] ^= rows[rank];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(n_cols), false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::uint64_t> basis;
  for (int f = 0; f < n_cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::uint64_t v = std::uint64_t{1} << f;
    for (std::size_t r = 0; r < rank; ++r) {
      if ((rows[r] >> f) & 1u) v |= std::uint64_t{1} << pivot_col[r];
    }
    basis.push_back(v);
  }
  return basis;
}

bool anticommute(const PauliString& a, const PauliString& b) { return !pauli_commutes(a, b); }

// Symplectic Gram-Schmidt with respect to the standard form; returns (e_i, f_i)
// with e_i, f_j anticommuting iff i == j and all other pairs commuting.
std::vector<std::pair<PauliString, PauliString>> symplectic_pairs(std::vector<PauliString> span,
                                                                  std::string_view label) {
  std::vector<std::pair<PauliString, PauliString>> pairs;
  while (!span.empty()) {
    const PauliString e = span.front();
    span.erase(span.begin());
    auto it = std::find_if(span.begin(), span.end(), [&](const PauliString& g) { return anticommute(e, g); });
    if (it == span.end()) {
      throw FactorizationDegenerate(std::string(label) + ": subgroup is not symplectic (element " + e.str() +
                                    " commutes with the rest)");
    }
    const PauliString f = *it;
    span.erase(it);
    for (PauliString& g : span) {
      const bool with_f = anticommute(g, f);
      const bool with_e = anticommute(g, e);
      if (with_f) g = pauli_multiply(g, e).result;
      if (with_e) g = pauli_multiply(g, f).result;
    }
    pairs.emplace_back(e, f);
  }
  return pairs;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

bool form_bit(const Matrix& p, const Matrix& q) {
  // Hermitian unitaries from a projective Pauli representation either commute
  // or anticommute; Tr(pqpq)/dim is then +1 or -1.
  const double t = (p * q * p * q).trace().real() / static_cast<double>(p.rows());
  return t < 0.0;
}

void fix_sign(Matrix& x, Matrix& y) {
  const Eigen::Index n = x.rows();
  auto flip_needed = [](const cplx& v) { return v.real() < 0.0 || (v.real() == 0.0 && v.imag() < 0.0); };
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(x(i, i)) > 1e-8) {
      if (flip_needed(x(i, i))) {
        x = -x;
        y = -y;
      }
      return;
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i != j && std::abs(x(i, j)) > 1e-8) {
        if (flip_needed(x(i, j))) {
          x = -x;
          y = -y;
        }
        return;
      }
    }
  }
}

}  // namespace

namespace detail {

cplx cocycle_phi(const Matrix& y1, const Matrix& y2, const Matrix& y12) {
  return (y2 * y1 * y12).trace() / static_cast<double>(y1.rows());
}

Matrix partial_trace_b(const Matrix& o, const Bipartition& bp) {
  const auto da = static_cast<Eigen::Index>(bp.d_a());
  const auto db = static_cast<Eigen::Index>(bp.d_b());
  Matrix out = Matrix::Zero(da, da);
  for (Eigen::Index a2 = 0; a2 < da; ++a2) {
    for (Eigen::Index a = 0; a < da; ++a) {
      cplx s = 0.0;
      for (Eigen::Index b = 0; b < db; ++b) s += o(a * db + b, a2 * db + b);
      out(a, a2) = s;
    }
  }
  return out;
}

Matrix partial_trace_a(const Matrix& o, const Bipartition& bp) {
  const auto da = static_cast<Eigen::Index>(bp.d_a());
  const auto db = static_cast<Eigen::Index>(bp.d_b());
  Matrix out = Matrix::Zero(db, db);
  for (Eigen::Index a = 0; a < da; ++a) out += o.block(a * db, a * db, db, db);
  return out;
}

Matrix unitary_from_pauli_images(const std::vector<Matrix>& xs, const std::vector<Matrix>& zs) {
  const int n = static_cast<int>(xs.size());
  if (n == 0 || zs.size() != xs.size()) throw InvalidArgument("need matching X and Z image families");
  const Eigen::Index dim = xs[0].rows();
  if (dim != (Eigen::Index{1} << n)) throw DimensionMismatch("image family does not match the space dimension");
  Matrix proj = Matrix::Identity(dim, dim);
  for (const Matrix& z : zs) proj = proj * (0.5 * (Matrix::Identity(dim, dim) + z));
  Eigen::Index best = 0;
  proj.colwise().norm().maxCoeff(&best);
  const double norm = proj.col(best).norm();
  if (norm < 1e-6) throw FactorizationDegenerate("Z-image family has no joint +1 eigenvector");
  Matrix m(dim, dim);
  m.col(0) = proj.col(best) / norm;
  for (Eigen::Index s = 1; s < dim; ++s) {
    const int low = std::countr_zero(static_cast<std::uint64_t>(s));
    m.col(s) = xs[static_cast<std::size_t>(n - 1 - low)] * m.col(s & (s - 1));
  }
  return m;
}

}  // namespace detail

ProductCheck check_pauli_product_preserving(const DenseOperator& u, const Bipartition& bp, double tol, int max_qubits) {
  require_qubits(u, bp, "check_pauli_product_preserving");
  check_dense_limit(u.n_qubits(), max_qubits, "check_pauli_product_preserving");
  require_unitary(u, kOperatorTol, "check_pauli_product_preserving");
  const int n = u.n_qubits();
  auto lambda2 = [&](const PauliString& p) {
    const SchmidtSpectrum s = operator_schmidt_spectrum(DenseOperator(n, evolved_pauli(u.matrix(), p)), bp);
    return s.lambdas.size() > 1 ? s.lambdas[1] : 0.0;
  };
  ProductCheck out;
  auto test = [&](const PauliString& p) {
    const double l2 = lambda2(p);
    if (l2 > tol) {
      out.product_preserving = false;
      out.witness = p;
      out.witness_lambda2 = l2;
      return false;
    }
    return true;
  };
  for (int r = 0; r < 2 * n; ++r) {
    if (!test(string_of_vector(n, std::uint64_t{1} << r))) return out;
  }
  for (const PauliString& p : enumerate_paulis(n)) {
    if (!test(p)) return out;
  }
  return out;
}

HermitianUnitaryFactors normalize_hermitian_unitary_factors(const Matrix& x_raw, const Matrix& y_raw) {
  const double db = static_cast<double>(y_raw.rows());
  const double da = static_cast<double>(x_raw.rows());
  const double c = std::sqrt((y_raw.adjoint() * y_raw).trace().real() / db);
  if (!(c > 0.0)) throw InvalidArgument("factor is zero");
  Matrix x = x_raw * c;
  Matrix y = y_raw / c;
  // x = e^{i theta} X with X Hermitian unitary, so Tr(x x) / d_A = e^{2 i theta}.
  const cplx phase = std::sqrt((x * x).trace() / da);
  if (std::abs(phase) < 0.5) throw NotHermitian("factor is not a phase times a Hermitian unitary");
  const cplx unit = phase / std::abs(phase);
  x /= unit;
  y *= unit;
  fix_sign(x, y);
  return {std::move(x), std::move(y)};
}

HermitianUnitaryFactors extract_hermitian_unitary_factors(const Matrix& o, const Bipartition& bp, double tol) {
  const DenseOperator op(bp.n(), o);
  if (!op.is_hermitian(kOperatorTol)) throw NotHermitian("operator is not Hermitian");
  require_unitary(op, kOperatorTol, "extract_hermitian_unitary_factors");
  const Matrix r = realign(o, bp);
  Eigen::JacobiSVD<Matrix> svd(r, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd s = svd.singularValues();
  const double total = s.squaredNorm();
  if (s.size() > 1 && s(1) * s(1) / total > tol) {
    throw NotProduct("operator-Schmidt rank exceeds one (lambda_2 = " + std::to_string(s(1) * s(1) / total) + ")");
  }
  const auto da = static_cast<Eigen::Index>(bp.d_a());
  const auto db = static_cast<Eigen::Index>(bp.d_b());
  const double scale = s(0) * std::sqrt(static_cast<double>(bp.d()));
  Matrix x(da, da);
  Matrix y(db, db);
  for (Eigen::Index a = 0; a < da; ++a) {
    for (Eigen::Index a2 = 0; a2 < da; ++a2) x(a, a2) = svd.matrixU()(a * da + a2, 0) * scale;
  }
  for (Eigen::Index b = 0; b < db; ++b) {
    for (Eigen::Index b2 = 0; b2 < db; ++b2) y(b, b2) = std::conj(svd.matrixV()(b * db + b2, 0));
  }
  return normalize_hermitian_unitary_factors(x, y);
}

LocalCliffordFactorization factorize(const DenseOperator& u, const Bipartition& bp, double tol) {
  require_qubits(u, bp, "factorize");
  check_dense_limit(u.n_qubits(), kDefaultDenseLimit, "factorize");
  require_unitary(u, kOperatorTol, "factorize");
  const int n = u.n_qubits();
  const int n2 = 2 * n;

  // (1) Heisenberg-evolved generators and their Hermitian-unitary factors.
  std::vector<HermitianUnitaryFactors> fac;
  fac.reserve(static_cast<std::size_t>(n2));
  for (int r = 0; r < n2; ++r) {
    const PauliString g = string_of_vector(n, std::uint64_t{1} << r);
    try {
      fac.push_back(extract_hermitian_unitary_factors(evolved_pauli(u.matrix(), g), bp, tol));
    } catch (const NotProduct& e) {
      throw NotProductPreserving("generator " + g.str() + " evolves to an entangled operator: " + e.what());
    }
  }

  // (2) Commutation forms of the A and B factors; they must split the
  // standard form, and their radicals are the subgroups with trivial factor.
  std::vector<std::uint64_t> rows_a(static_cast<std::size_t>(n2), 0);
  std::vector<std::uint64_t> rows_b(static_cast<std::size_t>(n2), 0);
  for (int r = 0; r < n2; ++r) {
    for (int s = 0; s < n2; ++s) {
      const bool wa = form_bit(fac[r].x, fac[s].x);
      const bool wb = form_bit(fac[r].y, fac[s].y);
      if ((wa != wb) != (std::abs(r - s) == n)) {
        std::ostringstream os;
        os << "commutation forms do not add up at generators " << r << "," << s << " (A: " << wa << ", B: " << wb
           << ")";
        throw FactorizationDegenerate(os.str());
      }
      if (wa) rows_a[r] |= std::uint64_t{1} << s;
      if (wb) rows_b[r] |= std::uint64_t{1} << s;
    }
  }
  const std::vector<std::uint64_t> h_tilde = gf2_nullspace(rows_b, n2);  // B-factor proportional to 1
  const std::vector<std::uint64_t> h = gf2_nullspace(rows_a, n2);        // A-factor proportional to 1
  if (h_tilde.size() != static_cast<std::size_t>(2 * bp.n_a) || h.size() != static_cast<std::size_t>(2 * bp.n_b)) {
    throw FactorizationDegenerate("subgroup dimensions " + std::to_string(h_tilde.size()) + " and " +
                                  std::to_string(h.size()) + " do not match 2N_A = " + std::to_string(2 * bp.n_a) +
                                  " and 2N_B = " + std::to_string(2 * bp.n_b));
  }
  auto as_strings = [n](const std::vector<std::uint64_t>& vs) {
    std::vector<PauliString> out;
    for (std::uint64_t v : vs) out.push_back(string_of_vector(n, v));
    return out;
  };
  const auto pairs_a = symplectic_pairs(as_strings(h_tilde), "A subgroup");
  const auto pairs_b = symplectic_pairs(as_strings(h), "B subgroup");

  // (3) Local operators realized by each subgroup, and the unitaries that
  // bring them to standard Pauli form.
  const double da = static_cast<double>(bp.d_a());
  const double db = static_cast<double>(bp.d_b());
  std::vector<Matrix> ax, az, bx, bz;
  for (const auto& [e, f] : pairs_a) {
    ax.push_back(detail::partial_trace_b(evolved_pauli(u.matrix(), e), bp) / db);
    az.push_back(detail::partial_trace_b(evolved_pauli(u.matrix(), f), bp) / db);
  }
  for (const auto& [e, f] : pairs_b) {
    bx.push_back(detail::partial_trace_a(evolved_pauli(u.matrix(), e), bp) / da);
    bz.push_back(detail::partial_trace_a(evolved_pauli(u.matrix(), f), bp) / da);
  }
  const Matrix v = detail::unitary_from_pauli_images(ax, az);
  const Matrix w = detail::unitary_from_pauli_images(bx, bz);

  // (4) U (V x W) sends X_i, Z_i to the chosen subgroup representatives, so it
  // is the Clifford with those images; C is its inverse.
  std::vector<SignedPauli> images(static_cast<std::size_t>(n2), {PauliString(n), 1});
  for (int i = 0; i < bp.n_a; ++i) {
    images[i] = {pairs_a[i].first, 1};
    images[n + i] = {pairs_a[i].second, 1};
  }
  for (int j = 0; j < bp.n_b; ++j) {
    images[bp.n_a + j] = {pairs_b[j].first, 1};
    images[n + bp.n_a + j] = {pairs_b[j].second, 1};
  }
  const CliffordTableau c = clifford_from_generator_images(images).inverse();

  // (5) Global phase by least squares.
  const Matrix m = kron(v, w) * clifford_to_dense(c).matrix();
  const cplx overlap = (m.adjoint() * u.matrix().adjoint()).trace();
  if (std::abs(overlap) < 1e-12) throw FactorizationDegenerate("reconstruction is orthogonal to U^dagger");
  return {DenseOperator(bp.n_a, v), DenseOperator(bp.n_b, w), c, overlap / std::abs(overlap)};
}

DenseOperator factorization_to_dense(const LocalCliffordFactorization& f) {
  const int n = f.v.n_qubits() + f.w.n_qubits();
  return {n, f.global_phase * kron(f.v.matrix(), f.w.matrix()) * clifford_to_dense(f.c).matrix()};
}

FactorizationCheck verify_factorization(const DenseOperator& u, const LocalCliffordFactorization& f) {
  const int n = f.v.n_qubits() + f.w.n_qubits();
  if (u.n_qubits() != n || f.c.n_qubits() != n) throw DimensionMismatch("factorization does not match the operator");
  FactorizationCheck out;
  const Matrix rebuilt = factorization_to_dense(f).matrix();
  out.residual = (rebuilt - u.matrix().adjoint()).norm() / std::sqrt(static_cast<double>(u.dim()));
  if (n <= 4) {
    out.corollary_checked = true;
    const Matrix vw = kron(f.v.matrix(), f.w.matrix());
    const Matrix uvw = u.matrix() * vw;
    for (const PauliString& p : enumerate_paulis(n)) {
      out.max_local_magic = std::max(out.max_local_magic, operator_magic_linear_unchecked(evolved_pauli(uvw, p)));
    }
  }
  return out;
}

}  // namespace paulient
