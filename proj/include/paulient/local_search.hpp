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
#include <functional>
#include <span>
#include <vector>

#include "paulient/dense.hpp"

namespace paulient {

/// Options for the multi-start local-unitary minimizer.
struct SearchConfig {
  int restarts = 8;  // total starts, including the identity and any seeds
  int max_iterations = 200;
  double tolerance = 1e-8;
  std::uint64_t seed = 1;
  double fd_step = 1e-6;
  /// Witness starting points; each entry holds one unitary per chart.
  std::vector<std::vector<Matrix>> seeds;
};

struct LocalUnitarySearchReport {
  double best_value = 0.0;
  std::vector<std::vector<double>> best_parameters;  // one vector per chart
  std::vector<Matrix> best_unitaries;
  int best_restart = 0;
  int restarts_used = 0;
  bool converged = false;
};

/// seed * exp(i sum_k theta_k P_k), P_k running over the 4^n phase-0 strings
/// in enumeration order (the identity term carries the global phase).
Matrix chart_unitary(const Matrix& seed, std::span<const double> theta);

using LocalObjective = std::function<double(const std::vector<Matrix>&)>;

/// Minimizes `objective` over one unitary per entry of `chart_qubits`.
///
/// Starts: the identity, then every configured seed, then Haar-random seeds up
/// to `restarts`. Each start runs BFGS on the exponential chart centred at its
/// seed, with central finite-difference gradients. Starts run concurrently with
/// private random streams; the minimum is taken with ties going to the lowest
/// start index. The result is an upper bound on the true minimum.
LocalUnitarySearchReport minimize_over_local_unitaries(const std::vector<int>& chart_qubits,
                                                       const LocalObjective& objective, const SearchConfig& config);

}  // namespace paulient
