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

#include "paulient/local_search.hpp"

#include <ceres/first_order_function.h>
#include <ceres/gradient_problem.h>
#include <ceres/gradient_problem_solver.h>

#include <memory>
#include <string>

#include "paulient/error.hpp"
#include "paulient/operator_entanglement.hpp"
#include "paulient/parallel.hpp"
#include "paulient/pauli.hpp"
#include "paulient/rng.hpp"

namespace paulient {

Matrix chart_unitary(const Matrix& seed, std::span<const double> theta) {
  const auto dim = static_cast<std::uint64_t>(seed.rows());
  const int n = std::countr_zero(dim);
  if (theta.size() != dim * dim) {
    throw DimensionMismatch("chart of dimension " + std::to_string(dim) + " needs " + std::to_string(dim * dim) +
                            " parameters");
  }
  Matrix h = Matrix::Zero(seed.rows(), seed.cols());
  for (std::uint64_t k = 0; k < theta.size(); ++k) {
    if (theta[k] == 0.0) continue;
    const PauliString p = PauliString::from_index(n, k);
    for (std::uint64_t b = 0; b < dim; ++b) {
      const auto [b2, s] = p.act_on_basis(b);
      h(static_cast<Eigen::Index>(b2), static_cast<Eigen::Index>(b)) += theta[k] * s;
    }
  }
  return seed * expm_hermitian(h, -1.0);
}

namespace {

struct Chart {
  std::vector<Matrix> seeds;
  std::vector<std::size_t> offsets;  // parameter offset per chart
  std::size_t n_params = 0;

  std::vector<Matrix> unitaries(const double* x) const {
    std::vector<Matrix> out;
    out.reserve(seeds.size());
    for (std::size_t c = 0; c < seeds.size(); ++c) {
      const auto dim = static_cast<std::size_t>(seeds[c].rows());
      out.push_back(chart_unitary(seeds[c], std::span<const double>(x + offsets[c], dim * dim)));
    }
    return out;
  }
};

class FiniteDifferenceObjective final : public ceres::FirstOrderFunction {
 public:
  FiniteDifferenceObjective(const Chart& chart, const LocalObjective& f, double step)
      : chart_(chart), f_(f), step_(step) {}

  bool Evaluate(const double* x, double* cost, double* gradient) const override {
    *cost = f_(chart_.unitaries(x));
    if (gradient != nullptr) {
      std::vector<double> y(x, x + chart_.n_params);
      for (std::size_t k = 0; k < chart_.n_params; ++k) {
        y[k] = x[k] + step_;
        const double up = f_(chart_.unitaries(y.data()));
        y[k] = x[k] - step_;
        const double down = f_(chart_.unitaries(y.data()));
        y[k] = x[k];
        gradient[k] = (up - down) / (2.0 * step_);
      }
    }
    return std::isfinite(*cost);
  }
  int NumParameters() const override { return static_cast<int>(chart_.n_params); }

 private:
  const Chart& chart_;
  const LocalObjective& f_;
  double step_;
};

struct StartResult {
  double value = 0.0;
  std::vector<double> x;
  std::vector<Matrix> seeds;
  bool converged = false;
};

}  // namespace

LocalUnitarySearchReport minimize_over_local_unitaries(const std::vector<int>& chart_qubits,
                                                       const LocalObjective& objective, const SearchConfig& config) {
  if (chart_qubits.empty()) throw InvalidArgument("local search needs at least one chart");
  for (const auto& s : config.seeds) {
    if (s.size() != chart_qubits.size()) throw InvalidArgument("every seed must provide one unitary per chart");
  }
  const int n_starts = std::max(config.restarts, 1 + static_cast<int>(config.seeds.size()));
  const RngStream root(config.seed);
  std::vector<StartResult> results(static_cast<std::size_t>(n_starts));

  parallel_blocks(results.size(), [&](std::size_t r) {
    RngStream rng = root.split(r);
    Chart chart;
    for (std::size_t c = 0; c < chart_qubits.size(); ++c) {
      const Eigen::Index dim = Eigen::Index{1} << chart_qubits[c];
      if (r == 0) {
        chart.seeds.push_back(Matrix::Identity(dim, dim));
      } else if (r <= config.seeds.size()) {
        const Matrix& s = config.seeds[r - 1][c];
        if (s.rows() != dim || s.cols() != dim) throw DimensionMismatch("seed unitary has the wrong dimension");
        chart.seeds.push_back(s);
      } else {
        chart.seeds.push_back(haar_unitary_matrix(dim, rng));
      }
      chart.offsets.push_back(chart.n_params);
      chart.n_params += static_cast<std::size_t>(dim * dim);
    }
    std::vector<double> x(chart.n_params, 0.0);
    const double start_value = objective(chart.unitaries(x.data()));

    ceres::GradientProblemSolver::Options options;
    options.line_search_direction_type = ceres::BFGS;
    options.max_num_iterations = config.max_iterations;
    options.function_tolerance = config.tolerance;
    options.parameter_tolerance = config.tolerance;
    options.gradient_tolerance = config.tolerance * 1e-2;
    options.logging_type = ceres::SILENT;
    ceres::GradientProblem problem(new FiniteDifferenceObjective(chart, objective, config.fd_step));
    ceres::GradientProblemSolver::Summary summary;
    ceres::Solve(options, problem, x.data(), &summary);

    StartResult& out = results[r];
    out.value = objective(chart.unitaries(x.data()));
    out.converged = summary.termination_type == ceres::CONVERGENCE;
    if (!(out.value <= start_value)) {
      std::fill(x.begin(), x.end(), 0.0);
      out.value = start_value;
    }
    out.x = std::move(x);
    out.seeds = std::move(chart.seeds);
  });

  std::size_t best = 0;
  for (std::size_t r = 1; r < results.size(); ++r) {
    if (results[r].value < results[best].value) best = r;
  }
  LocalUnitarySearchReport report;
  const StartResult& b = results[best];
  report.best_value = b.value;
  report.best_restart = static_cast<int>(best);
  report.restarts_used = n_starts;
  report.converged = b.converged;
  std::size_t offset = 0;
  for (std::size_t c = 0; c < chart_qubits.size(); ++c) {
    const auto dim = static_cast<std::size_t>(b.seeds[c].rows());
    std::vector<double> theta(b.x.begin() + static_cast<std::ptrdiff_t>(offset),
                              b.x.begin() + static_cast<std::ptrdiff_t>(offset + dim * dim));
    report.best_unitaries.push_back(chart_unitary(b.seeds[c], theta));
    report.best_parameters.push_back(std::move(theta));
    offset += dim * dim;
  }
  return report;
}

}  // namespace paulient
