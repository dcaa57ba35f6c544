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

#include "paulient/spin_chain.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "paulient/error.hpp"
#include "paulient/operator_entanglement.hpp"
#include "paulient/parallel.hpp"
#include "paulient/pauli.hpp"

namespace paulient {

SpinChainModel SpinChainModel::xyz(int n_sites, double jx, double jy, double jz, double h) {
  SpinChainModel m;
  m.kind = Kind::kXyz;
  m.n_sites = n_sites;
  m.jx = jx;
  m.jy = jy;
  m.jz = jz;
  m.h = h;
  return m;
}

SpinChainModel SpinChainModel::tfim(int n_sites, double j, double h, double g) {
  SpinChainModel m;
  m.kind = Kind::kTfim;
  m.n_sites = n_sites;
  m.j = j;
  m.h = h;
  m.g = g;
  return m;
}

namespace {

// Adds c * P to a dense matrix without building P.
void add_pauli(Matrix& h, const PauliString& p, double c) {
  for (Eigen::Index b = 0; b < h.cols(); ++b) {
    const auto [b2, s] = p.act_on_basis(static_cast<std::uint64_t>(b));
    h(static_cast<Eigen::Index>(b2), b) += c * s;
  }
}

PauliString pair_term(int n, int i, char op) {
  const int k = (i + 1) % n;
  PauliString a = PauliString::single(n, i, op);
  return pauli_multiply(a, PauliString::single(n, k, op)).result;
}

}  // namespace

DenseOperator build_hamiltonian(const SpinChainModel& m, int max_qubits) {
  const int n = m.n_sites;
  if (n < 2) throw InvalidArgument("spin chain needs at least two sites");
  check_dense_limit(n, max_qubits, "build_hamiltonian");
  const Eigen::Index d = Eigen::Index{1} << n;
  Matrix h = Matrix::Zero(d, d);
  // For N = 2 the periodic wrap repeats the single bond, as the sum over i prescribes.
  for (int i = 0; i < n; ++i) {
    if (m.kind == SpinChainModel::Kind::kXyz) {
      add_pauli(h, pair_term(n, i, 'X'), m.jx);
      add_pauli(h, pair_term(n, i, 'Y'), m.jy);
      add_pauli(h, pair_term(n, i, 'Z'), m.jz);
      add_pauli(h, PauliString::single(n, i, 'Z'), m.h);
    } else {
      add_pauli(h, pair_term(n, i, 'Z'), -m.j);
      add_pauli(h, PauliString::single(n, i, 'Z'), -m.h);
      add_pauli(h, PauliString::single(n, i, 'X'), -m.g);
    }
  }
  return {n, std::move(h)};
}

Propagator::Propagator(const DenseOperator& h) : n_qubits_(h.n_qubits()) {
  if (!h.is_hermitian(1e-10)) throw NotHermitian("propagator needs a Hermitian generator");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix());
  vectors_ = es.eigenvectors();
  energies_ = es.eigenvalues();
}

DenseOperator Propagator::at(double t) const {
  Vector phases(energies_.size());
  for (Eigen::Index i = 0; i < energies_.size(); ++i) phases(i) = std::polar(1.0, -energies_(i) * t);
  return {n_qubits_, vectors_ * phases.asDiagonal() * vectors_.adjoint()};
}

DenseOperator evolve_unitary(const DenseOperator& h, double t) { return Propagator(h).at(t); }

double series_mean(const TimeSeries& s) {
  CompensatedSum acc;
  for (const auto& v : s.values) acc.add(v.value);
  return s.values.empty() ? 0.0 : acc.value() / static_cast<double>(s.values.size());
}

std::vector<TimeSeries> long_time_average(const SeriesGenerator& generator, std::size_t n_observables,
                                          const LongTimeOptions& options) {
  if (!(options.dt > 0.0)) throw InvalidArgument("time step must be positive");
  std::vector<TimeSeries> series(n_observables);
  for (auto& s : series) s.dt = options.dt;
  std::vector<double> sum(n_observables, 0.0);
  std::vector<double> sum_sq(n_observables, 0.0);
  for (std::uint64_t k = 0; k < options.max_steps; ++k) {
    const double t = static_cast<double>(k) * options.dt;
    const std::vector<TimeSample> step = generator(t);
    if (step.size() != n_observables) throw InvalidArgument("series generator returned the wrong number of values");
    bool all_below = true;
    for (std::size_t o = 0; o < n_observables; ++o) {
      TimeSample s = step[o];
      s.t = t;
      series[o].values.push_back(s);
      sum[o] += s.value;
      sum_sq[o] += s.value * s.value;
      const double n = static_cast<double>(k + 1);
      const double mean = sum[o] / n;
      const double var = n > 1 ? std::max(0.0, (sum_sq[o] - n * mean * mean) / (n - 1)) : 0.0;
      series[o].n_steps = k + 1;
      series[o].running_sem = options.z * std::sqrt(var / n);
      if (!(series[o].running_sem < options.sem_threshold)) all_below = false;
    }
    if (k + 1 >= options.min_steps && all_below) {
      for (auto& s : series) s.threshold_reached = true;
      break;
    }
  }
  return series;
}

SpinChainModel sweep_model(const SweepConfig& c, double value) {
  if (c.family == SweepFamily::kXyzJz) return SpinChainModel::xyz(c.n_sites, c.jx, c.jy, value, c.h);
  return SpinChainModel::tfim(c.n_sites, c.j, value, c.g);
}

std::vector<SweepRow> run_sweep_experiment(const SweepConfig& config) {
  const Bipartition bp = Bipartition::half(config.n_sites);
  const RngStream root(config.seed);
  std::vector<SweepRow> rows(config.values.size());
  parallel_blocks(rows.size(), [&](std::size_t v) {
    const double value = config.values[v];
    const Propagator prop(build_hamiltonian(sweep_model(config, value)));
    const RngStream value_stream = root.split(v);
    std::uint64_t samples = 0;
    std::uint64_t step = 0;
    auto generator = [&](double t) {
      const DenseOperator u = prop.at(t);
      TimeSample pe;
      if (config.mode == PowerMode::kExact) {
        pe.value = pauli_entangling_power_exact(u, bp, {config.n_sites, ExactRoute::kAuto}).value;
        samples += pauli_count(config.n_sites);
      } else {
        RngStream rng = value_stream.split(step);
        const PauliPowerEstimate est = pauli_entangling_power_sampled(u, bp, rng, config.sampling);
        pe.value = est.value;
        pe.sem = est.sem;
        samples += est.n_samples;
      }
      ++step;
      TimeSample e;
      e.value = linear_entanglement_unchecked(u.matrix(), bp);
      return std::vector<TimeSample>{pe, e};
    };
    const std::vector<TimeSeries> s = long_time_average(generator, 2, config.time);
    rows[v] = {value, config.n_sites, series_mean(s[0]), series_mean(s[1]), s[0].n_steps, samples,
               s[0].threshold_reached};
  });
  return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "sweep_value,n_sites,mean_PE,mean_E,n_steps,total_samples,converged\n";
  os << std::setprecision(12);
  for (const auto& r : rows) {
    os << r.sweep_value << ',' << r.n_sites << ',' << r.mean_pe << ',' << r.mean_e << ',' << r.n_steps << ','
       << r.total_samples << ',' << (r.converged ? 1 : 0) << '\n';
  }
}

}  // namespace paulient
