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

#include "paulient/selftest.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "paulient/clifford.hpp"
#include "paulient/mpu.hpp"
#include "paulient/nonstabilizerness.hpp"
#include "paulient/operator_entanglement.hpp"
#include "paulient/pauli.hpp"
#include "paulient/pauli_power.hpp"
#include "paulient/spin_chain.hpp"
#include "paulient/theorem1.hpp"

namespace paulient {

namespace {

struct Check {
  const char* module;
  const char* name;
  std::function<std::string()> body;  // empty string on success, a reason otherwise
};

std::string expect_near(double got, double want, double tol) {
  if (std::abs(got - want) <= tol) return {};
  std::ostringstream os;
  os << std::setprecision(12) << "got " << got << ", expected " << want << " (tol " << tol << ")";
  return os.str();
}

DenseOperator xx_rotation() {
  return {2, expm_hermitian(pauli_to_dense(PauliString::from_string("XX")).matrix(), M_PI / 8)};
}

std::vector<Check> checks() {
  return {
      {"pauli_algebra", "XZ = -iY and anticommutation",
       [] {
         const auto r = pauli_multiply(PauliString::from_string("X"), PauliString::from_string("Z"));
         const cplx phase = r.cocycle();
         const bool ok = r.result.canonical() == PauliString::from_string("Y") &&
                         !pauli_commutes(PauliString::from_string("X"), PauliString::from_string("Z"));
         return ok && std::abs(phase - cplx(0, -1)) < 1e-12 ? std::string{} : std::string("product rule broken");
       }},
      {"pauli_algebra", "random Clifford preserves the symplectic form and inverts",
       [] {
         RngStream rng(11);
         for (int t = 0; t < 20; ++t) {
           const CliffordTableau c = clifford_random(4, rng);
           if (!c.preserves_symplectic_form()) return std::string("symplectic form violated");
           if (!(c.then(c.inverse()) == CliffordTableau::identity(4))) return std::string("inverse failed");
         }
         return std::string{};
       }},
      {"pauli_algebra", "dense Clifford lift matches tableau conjugation",
       [] {
         RngStream rng(12);
         const CliffordTableau c = clifford_random(3, rng);
         const Matrix u = clifford_to_dense(c).matrix();
         for (std::uint64_t i = 0; i < pauli_count(3); ++i) {
           const PauliString p = PauliString::from_index(3, i);
           const PauliString q = c.conjugate_with_phase(p);
           if ((u * pauli_to_dense(p).matrix() * u.adjoint() - pauli_to_dense(q).matrix()).norm() > 1e-10) {
             return "mismatch on " + p.str();
           }
         }
         return std::string{};
       }},
      {"operator_core", "E_lin(SWAP) = 3/4, E_lin(local) = 0",
       [] {
         Matrix swap = Matrix::Zero(4, 4);
         swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1;
         RngStream rng(13);
         const DenseOperator local = haar_random_unitary(1, rng).kron(haar_random_unitary(1, rng));
         const std::string a = expect_near(operator_entanglement({2, swap}, {1, 1}), 0.75, 1e-12);
         return a.empty() ? expect_near(operator_entanglement(local, {1, 1}), 0.0, 1e-12) : a;
       }},
      {"nonstabilizerness", "m2(T state) = log2(4/3)",
       [] {
         Vector t(2);
         t << 1.0 / std::sqrt(2.0), std::polar(1.0 / std::sqrt(2.0), M_PI / 4);
         return expect_near(stabilizer_renyi_entropy(StateVector(1, t)), std::log2(4.0 / 3.0), 1e-10);
       }},
      {"nonstabilizerness", "stabilizer states have m2 = 0",
       [] {
         RngStream rng(14);
         for (int t = 0; t < 10; ++t) {
           const StateVector s = StateVector::basis(3, 0).evolved(clifford_to_dense(clifford_random(3, rng)));
           const std::string r = expect_near(stabilizer_renyi_entropy(s), 0.0, 1e-10);
           if (!r.empty()) return r;
         }
         return std::string{};
       }},
      {"nonstabilizerness", "M_lin equals the operator-space 2-coherence",
       [] {
         RngStream rng(15);
         const DenseOperator u = haar_random_unitary(3, rng);
         return expect_near(operator_stabilizer_entropy(u), operator_coherence_2(u), 1e-14);
       }},
      {"pauli_power", "P_E(exp(-i pi/8 XX)) = 1/4 on every route",
       [] {
         const DenseOperator u = xx_rotation();
         for (ExactRoute r : {ExactRoute::kPerPauli, ExactRoute::kLocalCoefficients, ExactRoute::kGramBlocks}) {
           const std::string s = expect_near(pauli_entangling_power_exact(u, {1, 1}, {8, r}).value, 0.25, 1e-10);
           if (!s.empty()) return s;
         }
         return expect_near(pauli_power_via_q(u, {1, 1}), 0.25, 1e-10);
       }},
      {"pauli_power", "Q projector idempotent with trace d^2",
       [] {
         const Matrix q = q_projector_build(2);
         if ((q * q - q).norm() > 1e-10) return std::string("Q^2 != Q");
         return expect_near(q.trace().real(), 16.0, 1e-10);
       }},
      {"pauli_power", "Haar average at d = 16, d_A = 4",
       [] { return expect_near(haar_typical_value(16, 4).value, 885600.0 / 1011712.0, 1e-12); }},
      {"pauli_power", "local magic bound dominates P_E",
       [] {
         RngStream rng(16);
         const DenseOperator u = haar_random_unitary(3, rng);
         const double pe = pauli_entangling_power_exact(u, {1, 2}).value;
         return local_pauli_magic_bound(u, {1, 2}).min() >= pe - 1e-10 ? std::string{} : std::string("bound < P_E");
       }},
      {"theorem1_factorizer", "Clifford-local product round trip",
       [] {
         RngStream rng(17);
         for (int t = 0; t < 10; ++t) {
           const int n = 2 + t % 3;
           const Bipartition bp{1, n - 1};
           const DenseOperator loc = haar_random_unitary(bp.n_a, rng).kron(haar_random_unitary(bp.n_b, rng));
           const DenseOperator u = clifford_to_dense(clifford_random(n, rng)).adjoint() * loc.adjoint();
           if (!check_pauli_product_preserving(u, bp).product_preserving) return std::string("check returned false");
           const double res = verify_factorization(u, factorize(u, bp)).residual;
           if (res > 1e-8) return "residual " + std::to_string(res);
         }
         return std::string{};
       }},
      {"theorem1_factorizer", "Haar unitaries are not product preserving",
       [] {
         RngStream rng(18);
         const DenseOperator u = haar_random_unitary(3, rng);
         return check_pauli_product_preserving(u, {1, 2}).product_preserving ? std::string("check returned true")
                                                                              : std::string{};
       }},
      {"mpu_engine", "transfer-matrix P_E matches dense",
       [] {
         const MpuTensor a = mpu_library::t_hadamard_cz_ring();
         const double dense = pauli_entangling_power_exact(mpu_to_dense(a, 4), {2, 2}).value;
         return expect_near(pauli_power_mpu(a, 2, 2), dense, 1e-8);
       }},
      {"spin_chain_lab", "Hamiltonian Hermitian, U_t a one-parameter group",
       [] {
         const DenseOperator h = build_hamiltonian(SpinChainModel::xyz(4, 0.75, 0.25, 1.0, 0.5));
         if (!h.is_hermitian()) return std::string("H not Hermitian");
         const Propagator p(h);
         const double err = (p.at(0.3).matrix() * p.at(0.5).matrix() - p.at(0.8).matrix()).norm();
         return expect_near(err, 0.0, 1e-10);
       }},
      {"spin_chain_lab", "constant series stops at N_min",
       [] {
         const auto s = long_time_average([](double) { return std::vector<TimeSample>{{0.0, 0.3, 0.0}}; }, 1);
         if (s[0].n_steps != 25 || !s[0].threshold_reached) return std::string("wrong stopping step");
         return expect_near(series_mean(s[0]), 0.3, 1e-14);
       }},
  };
}

}  // namespace

std::vector<SelfTestResult> run_selftest() {
  std::vector<SelfTestResult> out;
  for (const auto& c : checks()) {
    SelfTestResult r{c.module, c.name, false, {}};
    try {
      r.detail = c.body();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("threw ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

bool print_selftest(std::ostream& os, const std::vector<SelfTestResult>& results) {
  std::size_t failed = 0;
  for (const auto& r : results) {
    os << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(22) << r.module << r.name;
    if (!r.passed) {
      os << "  [" << r.detail << ']';
      ++failed;
    }
    os << '\n';
  }
  os << results.size() - failed << '/' << results.size() << " checks passed\n";
  return failed == 0;
}

}  // namespace paulient
