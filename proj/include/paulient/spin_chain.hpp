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
#include <iosfwd>
#include <string>
#include <vector>

#include "paulient/dense.hpp"
#include "paulient/pauli_power.hpp"

namespace paulient {

/// Periodic spin chain, site N+1 identified with site 1.
///   XYZ:  H = sum_i (Jx X_i X_{i+1} + Jy Y_i Y_{i+1} + Jz Z_i Z_{i+1} + h Z_i)
///   TFIM: H = -sum_i (J Z_i Z_{i+1} + h Z_i + g X_i)
struct SpinChainModel {
  enum class Kind { kXyz, kTfim };
  Kind kind = Kind::kXyz;
  int n_sites = 2;
  double jx = 0.0, jy = 0.0, jz = 0.0;  // XYZ couplings
  double j = 1.0;                       // TFIM coupling
  double h = 0.0;                       // longitudinal field (both models)
  double g = 0.0;                       // TFIM transverse field

  static SpinChainModel xyz(int n_sites, double jx, double jy, double jz, double h);
  static SpinChainModel tfim(int n_sites, double j, double h, double g);
};

DenseOperator build_hamiltonian(const SpinChainModel& m, int max_qubits = kDefaultDenseLimit);

/// exp(-i H t) from one eigendecomposition of H, reused for every t.
class Propagator {
 public:
  explicit Propagator(const DenseOperator& h);
  DenseOperator at(double t) const;

 private:
  int n_qubits_;
  Matrix vectors_;
  Eigen::VectorXd energies_;
};

DenseOperator evolve_unitary(const DenseOperator& h, double t);

struct TimeSample {
  double t = 0.0;
  double value = 0.0;
  double sem = 0.0;  // per-step estimator error (0 for exact observables)
};

struct TimeSeries {
  double dt = 0.2;
  std::vector<TimeSample> values;
  std::uint64_t n_steps = 0;
  double running_sem = 0.0;  // z * sigma / sqrt(N_t) at the last step
  bool threshold_reached = false;
};

struct LongTimeOptions {
  double dt = 0.2;
  double sem_threshold = 2e-2;
  double z = 1.96;
  std::uint64_t min_steps = 25;
  std::uint64_t max_steps = 5000;
};

/// One step of several observables at time t.
using SeriesGenerator = std::function<std::vector<TimeSample>(double t)>;

/// Running means of the observables sampled at t_k = k dt. Stops at the first
/// N_t >= min_steps where z * sigma / sqrt(N_t) < sem_threshold holds for every
/// observable, sigma being the sample standard deviation of the series. If
/// max_steps is reached first the partial result is returned with
/// threshold_reached = false.
std::vector<TimeSeries> long_time_average(const SeriesGenerator& generator, std::size_t n_observables,
                                          const LongTimeOptions& options = {});

double series_mean(const TimeSeries& s);

enum class SweepFamily { kXyzJz, kTfimH };

struct SweepConfig {
  SweepFamily family = SweepFamily::kXyzJz;
  std::vector<double> values;
  int n_sites = 8;
  PowerMode mode = PowerMode::kExact;
  double jx = 0.75, jy = 0.25, h = 0.5;  // XYZ fixed parameters
  double j = 1.0, g = 1.0;               // TFIM fixed parameters
  LongTimeOptions time;
  SamplingOptions sampling{2e-2, 1.96};
  std::uint64_t seed = 1;
};

struct SweepRow {
  double sweep_value = 0.0;
  int n_sites = 0;
  double mean_pe = 0.0;
  double mean_e = 0.0;
  std::uint64_t n_steps = 0;
  std::uint64_t total_samples = 0;
  bool converged = false;
};

SpinChainModel sweep_model(const SweepConfig& c, double value);

/// Long-time averages of P_E(U_t) and E_lin(U_t) for every sweep value, with
/// A = the first floor(N/2) sites. Values run concurrently; sampled mode uses
/// one random stream per (value, step).
std::vector<SweepRow> run_sweep_experiment(const SweepConfig& config);

/// Header: sweep_value,n_sites,mean_PE,mean_E,n_steps,total_samples,converged
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

}  // namespace paulient
