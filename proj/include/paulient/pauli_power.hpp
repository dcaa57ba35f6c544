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

#include <array>
#include <cstdint>
#include <string_view>

#include "paulient/dense.hpp"
#include "paulient/pauli.hpp"
#include "paulient/rng.hpp"

namespace paulient {

enum class PowerMode { kExact, kSampled };

/// P_E(U) = mean over all 4^N Pauli strings P of E_lin(U^dagger P U).
struct PauliPowerEstimate {
  double value = 0.0;
  PowerMode mode = PowerMode::kExact;
  std::uint64_t n_samples = 0;
  double sem = 0.0;  // sample_std / sqrt(n_samples); 0 in exact mode
};

enum class ExactRoute {
  /// kGramBlocks.
  kAuto,
  /// Evolve and realign every one of the 4^N strings. O(4^N d^3).
  kPerPauli,
  /// Pauli coefficients of U (P_S x 1) U^dagger for the d_S^2 strings P_S on the
  /// smaller side S: P_E = 1 - sum_P (sum_{P_S} |Tr(U P_S U^dagger P)|^2)^2 / (d^4 d_S^2).
  /// O(d^3 d_S + d_S^2 d^2 log d).
  kLocalCoefficients,
  /// Same identity written over pairs of leading column blocks, using the
  /// Hermitian symmetry of the Gram blocks; about half the transforms.
  kGramBlocks,
};

struct ExactOptions {
  int max_qubits = 8;
  ExactRoute route = ExactRoute::kAuto;
};

struct SamplingOptions {
  double sem_target = 2e-2;
  /// Stop once z * sem < sem_target (z = 1.96 reproduces a 95% half-width rule).
  double z = 1.0;
  /// When non-zero, draw exactly this many strings and ignore sem_target.
  std::uint64_t fixed_count = 0;
  std::uint64_t min_samples = 16;
  std::uint64_t max_samples = std::uint64_t{1} << 20;
  std::size_t batch = 32;
};

PauliPowerEstimate pauli_entangling_power_exact(const DenseOperator& u, const Bipartition& bp,
                                                const ExactOptions& options = {});

/// Monte-Carlo over i.i.d. uniform strings (identity included). Strings are
/// drawn in order from `rng` and evaluated in batches, so the estimate does
/// not depend on the worker count.
PauliPowerEstimate pauli_entangling_power_sampled(const DenseOperator& u, const Bipartition& bp, RngStream& rng,
                                                  const SamplingOptions& options = {});

/// U^dagger P U.
Matrix evolved_pauli(const Matrix& u, const PauliString& p);

/// E_lin(U^dagger P U) for one string.
double evolved_pauli_entanglement(const DenseOperator& u, const Bipartition& bp, const PauliString& p);

struct LocalMagicBounds {
  double bound_a = 0.0;  // mean_{P_A} M_lin(U (P_A x 1) U^dagger)
  double bound_b = 0.0;  // mean_{P_B} M_lin(U (1 x P_B) U^dagger)
  double min() const { return bound_a < bound_b ? bound_a : bound_b; }
};

LocalMagicBounds local_pauli_magic_bound(const DenseOperator& u, const Bipartition& bp, int max_qubits = 10);

/// Q = d^-2 sum_P P^{x4} on the quadrupled space, copies in order 1..4 with
/// copy 1 most significant. N <= 2.
Matrix q_projector_build(int n_qubits);

/// d^-2 Lambda^{xN} with Lambda = sum_sigma sigma^{x4}, reordered from
/// site-major to copy-major tensor order. N <= 2.
Matrix q_projector_from_lambda(int n_qubits);

/// Reorders an operator on (C^2)^{x4N} from site-major order (the four
/// copies of site 1, then of site 2, ...) to copy-major order.
Matrix site_major_to_copy_major(const Matrix& m, int n_sites);

/// Columns |psi_xz>^{x2}, |psi_xz> = (Z^z x X^x)|phi+>, column index x | z << N.
Matrix q_supplemental_basis(int n_qubits);

/// 1 - d^-2 Tr(T^A_{(12)(34)} U^dagger{x4} Q U^{x4}), with T^A_{(12)(34)}
/// applied as an index permutation. N <= 2.
double pauli_power_via_q(const DenseOperator& u, const Bipartition& bp);

struct HaarTypical {
  double value = 0.0;      // exact Haar average
  double expansion = 0.0;  // 1 - (1 - 1/d^2)/d_A^2 - (1 - 1/d^2)/d_B^2
};

/// (d^2 - d_A^2)(d^2 - 10)(d_A^2 - 1) / (d^2 d_A^2 (d^2 - 9)).
HaarTypical haar_typical_value(std::uint64_t d, std::uint64_t d_a);

struct HaarMonteCarlo {
  double mean = 0.0;
  double sem = 0.0;
  std::uint64_t n_samples = 0;
};

/// Mean exact P_E over Haar-random unitaries; sample k uses rng.split(k).
HaarMonteCarlo haar_pauli_power_monte_carlo(const Bipartition& bp, std::uint64_t n_samples, const RngStream& rng);

/// Conjugacy classes of S_4 with the representative used for each.
enum class S4Class { kIdentity, kTransposition, kDoubleTransposition, kThreeCycle, kFourCycle };
inline constexpr std::array<S4Class, 5> kS4Classes = {S4Class::kIdentity, S4Class::kTransposition,
                                                       S4Class::kDoubleTransposition, S4Class::kThreeCycle,
                                                       S4Class::kFourCycle};
std::string_view s4_class_name(S4Class c);  // "e", "(34)", "(12)(34)", "(123)", "(1234)"

/// Tr(Q T_sigma) for one representative per class, indexed like kS4Classes.
std::array<double, 5> q_permutation_traces(int n_qubits);

}  // namespace paulient
