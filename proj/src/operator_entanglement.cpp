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

#include "paulient/operator_entanglement.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "paulient/error.hpp"

namespace paulient {

double SchmidtSpectrum::sum() const {
  double s = 0.0;
  for (double l : lambdas) s += l;
  return s;
}

Matrix realign(const Matrix& o, const Bipartition& bp) {
  const auto da = static_cast<Eigen::Index>(bp.d_a());
  const auto db = static_cast<Eigen::Index>(bp.d_b());
  if (o.rows() != da * db || o.cols() != da * db) {
    throw DimensionMismatch("operator of dimension " + std::to_string(o.rows()) + " does not match bipartition " +
                            std::to_string(bp.n_a) + "|" + std::to_string(bp.n_b));
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(da * db));
  Matrix r(da * da, db * db);
  for (Eigen::Index a = 0; a < da; ++a) {
    for (Eigen::Index ap = 0; ap < da; ++ap) {
      const Eigen::Index row = a * da + ap;
      for (Eigen::Index b = 0; b < db; ++b) {
        for (Eigen::Index bp2 = 0; bp2 < db; ++bp2) r(row, b * db + bp2) = o(a * db + b, ap * db + bp2) * scale;
      }
    }
  }
  return r;
}

Matrix realign(const DenseOperator& o, const Bipartition& bp) { return realign(o.matrix(), bp); }

namespace {

Matrix small_gram(const Matrix& r) {
  if (r.rows() <= r.cols()) return r * r.adjoint();
  return r.adjoint() * r;
}

}  // namespace

SchmidtSpectrum schmidt_spectrum_from_lambdas(std::vector<double> lambdas) {
  for (double& l : lambdas) l = std::max(l, 0.0);
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  return {std::move(lambdas)};
}

SchmidtSpectrum operator_schmidt_spectrum(const DenseOperator& o, const Bipartition& bp) {
  require_qubits(o, bp, "operator_schmidt_spectrum");
  const Matrix g = small_gram(realign(o.matrix(), bp));
  Eigen::SelfAdjointEigenSolver<Matrix> es(g, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = es.eigenvalues();
  return schmidt_spectrum_from_lambdas(std::vector<double>(ev.data(), ev.data() + ev.size()));
}

double renyi_from_spectrum(const SchmidtSpectrum& s, double alpha) {
  if (!(alpha >= 0.0)) throw InvalidArgument("Renyi index must be non-negative");
  constexpr double kZero = 1e-15;
  if (std::abs(alpha - 1.0) < 1e-12) {
    double h = 0.0;
    for (double l : s.lambdas) {
      if (l > kZero) h -= l * std::log2(l);
    }
    return h;
  }
  double acc = 0.0;
  for (double l : s.lambdas) {
    if (l > kZero) acc += std::pow(l, alpha);
  }
  return std::log2(acc) / (1.0 - alpha);
}

double operator_entanglement(const DenseOperator& o, const Bipartition& bp, EntanglementMeasure measure) {
  require_qubits(o, bp, "operator_entanglement");
  const SchmidtSpectrum s = operator_schmidt_spectrum(o, bp);
  switch (measure.kind) {
    case EntanglementMeasure::Kind::kSchmidtRank: {
      const double cut = measure.tol * s.max();
      return static_cast<double>(std::count_if(s.lambdas.begin(), s.lambdas.end(), [&](double l) { return l > cut; }));
    }
    case EntanglementMeasure::Kind::kLinear: {
      require_unitary(o, 1e-8, "operator_entanglement");
      double p = 0.0;
      for (double l : s.lambdas) p += l * l;
      return 1.0 - p;
    }
    case EntanglementMeasure::Kind::kRenyi:
      require_unitary(o, 1e-8, "operator_entanglement");
      return renyi_from_spectrum(s, measure.alpha);
  }
  throw InvalidArgument("unknown entanglement measure");
}

double linear_entanglement_unchecked(const Matrix& o, const Bipartition& bp) {
  return 1.0 - small_gram(realign(o, bp)).squaredNorm();
}

Matrix haar_unitary_matrix(Eigen::Index dim, RngStream& rng) {
  if (dim < 1) throw InvalidArgument("Haar unitary dimension must be positive");
  Matrix z(dim, dim);
  const double s = std::sqrt(0.5);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) z(i, j) = cplx(s * rng.normal(), s * rng.normal());
  }
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

DenseOperator haar_random_unitary(int n_qubits, RngStream& rng) {
  check_dense_limit(n_qubits, kDefaultDenseLimit, "haar_random_unitary");
  return {n_qubits, haar_unitary_matrix(Eigen::Index{1} << n_qubits, rng)};
}

}  // namespace paulient
