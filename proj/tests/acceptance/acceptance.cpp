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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Usage: acceptance [criterion numbers...]   (default: all eleven)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "paulient/mpu.hpp"
#include "paulient/nonstabilizerness.hpp"
#include "paulient/pauli_power.hpp"
#include "paulient/spin_chain.hpp"
#include "paulient/theorem1.hpp"
#include "test_util.hpp"

namespace {

using namespace paulient;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: " << what << "; ";
      pass = false;
    }
  }
};

using Criterion = std::function<void(Verdict&)>;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void factorization_round_trip(Verdict& v) {
  const auto t0 = std::chrono::steady_clock::now();
  RngStream rng(101);
  double worst_residual = 0.0, worst_pe = 0.0;
  int instances = 0;
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + k % 4;
    const int na = 1 + (k / 4) % (n / 2);
    const Bipartition bp{na, n - na};
    const DenseOperator u = testing::product_form_unitary(bp, rng);
    const bool check = check_pauli_product_preserving(u, bp).product_preserving;
    const double residual = verify_factorization(u, factorize(u, bp)).residual;
    const double pe = pauli_entangling_power_exact(u, bp).value;
    v.require(check, "thm1-check false on instance " + std::to_string(k));
    worst_residual = std::max(worst_residual, residual);
    worst_pe = std::max(worst_pe, std::abs(pe));
    ++instances;
  }
  const double t = seconds_since(t0);
  v.require(worst_residual <= 1e-8, "residual above 1e-8");
  v.require(worst_pe <= 1e-12, "P_E above 1e-12");
  v.require(t <= 120.0, "runtime above 2 min");
  v.detail << instances << " instances, max residual " << worst_residual << ", max P_E " << worst_pe << ", " << t
           << " s";
}

void haar_rejected(Verdict& v) {
  RngStream rng(202);
  double min_pe = 1.0;
  int flagged = 0;
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + k % 3;
    const Bipartition bp{1 + k % (n - 1), n - 1 - k % (n - 1)};
    const DenseOperator u = haar_random_unitary(n, rng);
    const bool check = check_pauli_product_preserving(u, bp).product_preserving;
    const double pe = pauli_entangling_power_exact(u, bp).value;
    if (!check && pe > 1e-6) ++flagged;
    min_pe = std::min(min_pe, pe);
  }
  v.require(flagged == 100, "some Haar instance passed the check or had P_E <= 1e-6");
  v.detail << flagged << "/100 rejected, min P_E " << min_pe;
}

void q_formula_consistency(Verdict& v) {
  RngStream rng(303);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const DenseOperator u = haar_random_unitary(2, rng);
    const double a = pauli_entangling_power_exact(u, {1, 1}, {8, ExactRoute::kPerPauli}).value;
    worst = std::max(worst, std::abs(a - pauli_power_via_q(u, {1, 1})));
  }
  const double xx = pauli_entangling_power_exact(testing::xx_rotation(), {1, 1}, {8, ExactRoute::kPerPauli}).value;
  v.require(worst <= 1e-10, "per-Pauli and Q formula differ");
  v.require(std::abs(xx - 0.25) <= 1e-10, "exp(-i pi/8 XX) != 1/4");
  v.detail << "max |per-Pauli - Q| " << worst << ", P_E(xx) " << xx;
}

void haar_monte_carlo(Verdict& v) {
  const auto t0 = std::chrono::steady_clock::now();
  const HaarMonteCarlo big = haar_pauli_power_monte_carlo({2, 2}, 200, RngStream(404));
  const HaarMonteCarlo small = haar_pauli_power_monte_carlo({1, 1}, 200, RngStream(405));
  const double t = seconds_since(t0);
  const double closed_big = haar_typical_value(16, 4).value;
  v.require(std::abs(big.mean - 0.875349) <= 3 * big.sem, "d=16 mean outside 3 SEM of 0.875349");
  v.require(std::abs(big.mean - closed_big) <= 3 * big.sem, "d=16 mean outside 3 SEM of the closed form");
  v.require(std::abs(small.mean - 27.0 / 56.0) <= 3 * small.sem, "d=4 mean outside 3 SEM of 27/56");
  v.require(t <= 300.0, "runtime above 5 min");
  v.detail << "d=16: " << big.mean << " +- " << big.sem << " vs " << closed_big << "; d=4: " << small.mean << " +- "
           << small.sem << " vs " << 27.0 / 56.0 << "; " << t << " s";
}

void local_magic_bound(Verdict& v) {
  RngStream rng(505);
  double min_gap = 1.0;
  for (int k = 0; k < 50; ++k) {
    const int n = 3 + k % 2;
    const Bipartition bp{1 + k % (n - 1), n - 1 - k % (n - 1)};
    const DenseOperator u = haar_random_unitary(n, rng);
    min_gap = std::min(min_gap, local_pauli_magic_bound(u, bp).min() - pauli_entangling_power_exact(u, bp).value);
  }
  const LocalMagicBounds b = local_pauli_magic_bound(testing::xx_rotation(), {1, 1});
  const double pe = pauli_entangling_power_exact(testing::xx_rotation(), {1, 1}).value;
  v.require(min_gap >= -1e-10, "bound below P_E");
  v.require(std::abs(b.bound_a - 0.25) <= 1e-10 && std::abs(b.bound_b - 0.25) <= 1e-10 &&
                std::abs(pe - 0.25) <= 1e-10,
            "equality case");
  v.detail << "min(bound - P_E) " << min_gap << ", xx bounds (" << b.bound_a << ", " << b.bound_b << ")";
}

void clifford_local_invariance(Verdict& v) {
  RngStream rng(606);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const Bipartition bp{1 + k % 2, 2 - k % 2};
    const DenseOperator u = haar_random_unitary(3, rng);
    const DenseOperator moved = clifford_to_dense(clifford_random(3, rng)) * u * testing::random_local(bp, rng);
    worst = std::max(worst, std::abs(pauli_entangling_power_exact(moved, bp).value -
                                     pauli_entangling_power_exact(u, bp).value));
  }
  v.require(worst <= 1e-10, "P_E changed");
  v.detail << "max change " << worst;
}

void operator_magic(Verdict& v) {
  RngStream rng(707);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const DenseOperator u = haar_random_unitary(1 + k % 4, rng);
    worst = std::max(worst, std::abs(operator_stabilizer_entropy(u) - operator_coherence_2(u)));
  }
  const double cn = local_min_operator_magic({2, testing::cnot()}, {1, 1}).first;
  const double sw = local_min_operator_magic({2, testing::swap_gate()}, {1, 1}).first;
  v.require(worst <= 1e-14, "M_lin differs from c_2");
  v.require(std::abs(cn - 0.5) <= 1e-3, "CNOT minimum");
  v.require(std::abs(sw - 0.75) <= 1e-3, "SWAP minimum");
  v.detail << "max |M_lin - c2| " << worst << ", min M_lin CNOT " << cn << ", SWAP " << sw;
}

void q_projector_suite(Verdict& v) {
  double worst = 0.0;
  for (int n : {1, 2}) {
    const double d = std::pow(2.0, n);
    const Matrix q = q_projector_build(n);
    const Matrix basis = q_supplemental_basis(n);
    const auto cols = basis.cols();
    worst = std::max(worst, (q * q - q).cwiseAbs().maxCoeff());
    worst = std::max(worst, std::abs(q.trace() - d * d));
    worst = std::max(worst, (basis.adjoint() * basis - Matrix::Identity(cols, cols)).cwiseAbs().maxCoeff());
    worst = std::max(worst, (q * basis - basis).cwiseAbs().maxCoeff());
    const auto traces = q_permutation_traces(n);
    const std::array<double, 5> want{d * d, d, d * d, 1.0, d};
    for (int i = 0; i < 5; ++i) worst = std::max(worst, std::abs(traces[i] - want[i]));
  }
  v.require(worst <= 1e-10, "Q identities");
  v.detail << "max deviation " << worst;
}

void mpu_agreement(Verdict& v) {
  RngStream rng(909);
  const std::vector<MpuTensor> tensors = {mpu_library::local_gate(haar_random_unitary(1, rng).matrix()),
                                          mpu_library::cz_ring(), mpu_library::hadamard_cz_ring(),
                                          mpu_library::t_hadamard_cz_ring(), mpu_library::shift()};
  double worst = 0.0;
  for (const auto& a : tensors) {
    for (int n = 4; n <= 6; ++n) {
      const Bipartition bp = Bipartition::half(n);
      const double dense = pauli_entangling_power_exact(mpu_to_dense(a, n), bp).value;
      worst = std::max(worst, std::abs(pauli_power_mpu(a, bp.n_a, bp.n_b) - dense));
    }
  }
  double lambda = 0.0;
  for (int n : {1, 2}) {
    const double d = std::pow(2.0, n);
    lambda = std::max(lambda, (lambda_closure(n) - d * d * q_projector_build(n)).cwiseAbs().maxCoeff());
  }
  v.require(worst <= 1e-8, "finite mode differs from dense");
  v.require(lambda <= 1e-12, "Lambda closure differs from d^2 Q");
  v.detail << tensors.size() << " tensors (chi 1, 2) at N=4..6, max diff " << worst << ", Lambda " << lambda;
}

void spin_chain_orderings(Verdict& v) {
  const auto t0 = std::chrono::steady_clock::now();
  SweepConfig xyz;
  xyz.family = SweepFamily::kXyzJz;
  xyz.n_sites = 8;
  xyz.values = {0.0, 1.0};
  const auto x = run_sweep_experiment(xyz);
  SweepConfig tfim;
  tfim.family = SweepFamily::kTfimH;
  tfim.n_sites = 8;
  tfim.g = 1.0;
  tfim.values = {0.0, 0.5};
  const auto t = run_sweep_experiment(tfim);
  const double secs = seconds_since(t0);
  for (const auto* rows : {&x, &t}) {
    for (const auto& r : *rows) v.require(r.converged, "stopping rule not met");
  }
  v.require(x[1].mean_pe > x[0].mean_pe && x[1].mean_e > x[0].mean_e, "XYZ ordering");
  v.require(t[1].mean_pe > t[0].mean_pe && t[1].mean_e > t[0].mean_e, "TFIM ordering");
  v.require(secs <= 1800.0, "runtime above 30 min");
  v.detail << "XYZ Jz=0: (" << x[0].mean_pe << ", " << x[0].mean_e << ") Jz=1: (" << x[1].mean_pe << ", "
           << x[1].mean_e << "); TFIM h=0: (" << t[0].mean_pe << ", " << t[0].mean_e << ") h=0.5: (" << t[1].mean_pe
           << ", " << t[1].mean_e << "); " << secs << " s";
}

void magic_spot_values(Verdict& v) {
  Vector tv(2);
  tv << 1.0 / std::sqrt(2.0), std::polar(1.0 / std::sqrt(2.0), M_PI / 4);
  const double mt = stabilizer_renyi_entropy(StateVector(1, tv));
  RngStream rng(1111);
  double worst_stab = 0.0;
  for (int k = 0; k < 50; ++k) {
    const int n = 1 + k % 5;
    const StateVector s = StateVector::basis(n, 0).evolved(clifford_to_dense(clifford_random(n, rng)));
    worst_stab = std::max(worst_stab, std::abs(stabilizer_renyi_entropy(s)));
  }
  double worst_nl = 0.0;
  for (int k = 0; k < 5; ++k) {
    const Bipartition bp{1, 1 + k % 2};
    const Matrix va = haar_random_unitary(bp.n_a, rng).matrix();
    const Matrix wb = haar_random_unitary(bp.n_b, rng).matrix();
    const DenseOperator c = clifford_to_dense(clifford_random(bp.n(), rng));
    const DenseOperator vw = DenseOperator(bp.n_a, va).kron(DenseOperator(bp.n_b, wb));
    const StateVector psi = StateVector::basis(bp.n(), 0).evolved(c).evolved(vw);
    SearchConfig config;
    config.restarts = 2;
    config.seeds = {{va.adjoint(), wb.adjoint()}};
    worst_nl = std::max(worst_nl, nonlocal_stabilizer_entropy(psi, bp, 2.0, config).first);
  }
  v.require(std::abs(mt - std::log2(4.0 / 3.0)) <= 1e-10, "m2(T)");
  v.require(worst_stab <= 1e-10, "stabilizer states");
  v.require(worst_nl <= 1e-6, "seeded nonlocal search");
  v.detail << "m2(T) " << mt << ", max stabilizer m2 " << worst_stab << ", max nonlocal " << worst_nl;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, Criterion>> criteria = {
      {"factorization round trip", factorization_round_trip},
      {"Haar unitaries are rejected", haar_rejected},
      {"per-Pauli vs Q formula", q_formula_consistency},
      {"Haar Monte Carlo", haar_monte_carlo},
      {"local magic bound", local_magic_bound},
      {"Clifford/local invariance", clifford_local_invariance},
      {"operator magic and its local minimum", operator_magic},
      {"Q-projector suite", q_projector_suite},
      {"MPU agreement", mpu_agreement},
      {"spin-chain orderings (N=8)", spin_chain_orderings},
      {"magic-measure spot values", magic_spot_values},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!selected.empty() && !selected.count(id)) continue;
    Verdict v;
    v.detail.precision(6);
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << "threw " << e.what();
    }
    if (!v.pass) ++failed;
    std::cout << (v.pass ? "PASS" : "FAIL") << "  [" << id << "] " << criteria[i].first << ": " << v.detail.str()
              << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
