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

#include "paulient/pauli_power.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "paulient/error.hpp"
#include "paulient/kernels.hpp"
#include "paulient/operator_entanglement.hpp"
#include "paulient/parallel.hpp"
#include "paulient/pauli_transform.hpp"

namespace paulient {

namespace {

constexpr int kQuadrupledLimit = 2;

// Welford running moments.
class RunningStats {
 public:
  void add(double x) {
    ++n_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(n_);
    m2_ += delta * (x - mean_);
  }
  std::uint64_t count() const { return n_; }
  double mean() const { return mean_; }
  double sem() const {
    if (n_ < 2) return 0.0;
    return std::sqrt(m2_ / static_cast<double>(n_ - 1) / static_cast<double>(n_));
  }

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

// Reorders the columns so that the trailing block becomes the leading one.
Matrix trailing_first(const Matrix& u, const Bipartition& bp) {
  const auto da = static_cast<Eigen::Index>(bp.d_a());
  const auto db = static_cast<Eigen::Index>(bp.d_b());
  Matrix out(u.rows(), u.cols());
  for (Eigen::Index a = 0; a < da; ++a) {
    for (Eigen::Index b = 0; b < db; ++b) out.col(b * da + a) = u.col(a * db + b);
  }
  return out;
}

struct LocalPass {
  double pauli_power = 0.0;
  double mean_operator_magic = 0.0;
};

// One sweep over the d_S^2 strings P_S on the leading n_lead qubits. With U_k
// the column block of U for leading index k and G_{k,i} = U_k U_i^dagger,
//   U (P_{x,z} x 1) U^dagger = i^{|x&z|} sum_i (-1)^{z.i} G_{i^x, i},
// so a block transform over i produces all d_S operators sharing shift x.
LocalPass local_coefficient_pass(const Matrix& u, int n_lead) {
  const auto& k = simd::active_kernels();
  const auto d = static_cast<std::size_t>(u.rows());
  const std::size_t ds = std::size_t{1} << n_lead;
  const auto dt = static_cast<Eigen::Index>(d / ds);
  const auto di = static_cast<Eigen::Index>(d);
  const std::size_t dd = d * d;
  const double d4 = static_cast<double>(dd) * static_cast<double>(dd);

  const std::size_t n_chunks = std::min<std::size_t>(ds, 4);
  std::vector<std::vector<double>> weight(n_chunks, std::vector<double>(dd, 0.0));
  std::vector<double> magic(ds * ds, 0.0);

  parallel_blocks(n_chunks, [&](std::size_t c) {
    std::vector<cplx> blocks(ds * dd);
    std::vector<cplx> coeffs;
    for (std::size_t x = c; x < ds; x += n_chunks) {
      for (std::size_t i = 0; i < ds; ++i) {
        Eigen::Map<Matrix> g(blocks.data() + i * dd, di, di);
        g.noalias() = u.middleCols(static_cast<Eigen::Index>(i ^ x) * dt, dt) *
                      u.middleCols(static_cast<Eigen::Index>(i) * dt, dt).adjoint();
      }
      simd::fwht_blocks(k, blocks.data(), ds, dd);
      for (std::size_t z = 0; z < ds; ++z) {
        pauli_coefficients_into(Eigen::Map<const Matrix>(blocks.data() + z * dd, di, di), coeffs);
        k.accumulate_abs2(coeffs.data(), weight[c].data(), dd);
        magic[x * ds + z] = 1.0 - k.sum_abs4(coeffs.data(), dd) / d4;
      }
    }
  });

  std::vector<double> total(dd, 0.0);
  for (const auto& w : weight) {
    for (std::size_t p = 0; p < dd; ++p) total[p] += w[p];
  }
  const double purity = k.sum_squares(total.data(), dd);
  CompensatedSum m;
  for (double v : magic) m.add(v);
  const double dsd = static_cast<double>(ds);
  return {1.0 - purity / (d4 * dsd * dsd), m.value() / static_cast<double>(magic.size())};
}

// P_E alone. With G_{a',a} = U_{a'} U_a^dagger over leading indices,
//   sum_{P_S} |Tr(U P_S U^dagger P)|^2 = d_S sum_{a,a'} |Tr(P G_{a',a})|^2,
// and G_{a,a'} = G_{a',a}^dagger halves the number of transforms.
double gram_pass(const Matrix& u, int n_lead) {
  const auto& k = simd::active_kernels();
  const auto d = static_cast<std::size_t>(u.rows());
  const std::size_t ds = std::size_t{1} << n_lead;
  const auto dt = static_cast<Eigen::Index>(d / ds);
  const auto di = static_cast<Eigen::Index>(d);
  const std::size_t dd = d * d;
  const double d4 = static_cast<double>(dd) * static_cast<double>(dd);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < ds; ++a) {
    for (std::size_t b = a; b < ds; ++b) pairs.emplace_back(a, b);
  }
  const std::size_t n_chunks = std::min<std::size_t>(pairs.size(), 4);
  std::vector<std::vector<double>> weight(n_chunks, std::vector<double>(dd, 0.0));
  parallel_blocks(n_chunks, [&](std::size_t c) {
    Matrix g(di, di);
    std::vector<cplx> coeffs;
    std::vector<double> half(dd, 0.0);
    for (std::size_t p = c; p < pairs.size(); p += n_chunks) {
      const auto [a, b] = pairs[p];
      g.noalias() = u.middleCols(static_cast<Eigen::Index>(b) * dt, dt) *
                    u.middleCols(static_cast<Eigen::Index>(a) * dt, dt).adjoint();
      pauli_coefficients_into(g, coeffs);
      k.accumulate_abs2(coeffs.data(), a == b ? weight[c].data() : half.data(), dd);
    }
    for (std::size_t i = 0; i < dd; ++i) weight[c][i] += 2.0 * half[i];
  });
  std::vector<double> total(dd, 0.0);
  for (const auto& w : weight) {
    for (std::size_t p = 0; p < dd; ++p) total[p] += w[p];
  }
  return 1.0 - k.sum_squares(total.data(), dd) / d4;
}

void check_power_input(const DenseOperator& u, const Bipartition& bp, int max_qubits, std::string_view what) {
  require_qubits(u, bp, what);
  check_dense_limit(u.n_qubits(), max_qubits, what);
  require_unitary(u, 1e-8, what);
}

std::uint64_t copy_major_index(const std::array<std::uint64_t, 4>& idx, int n) {
  std::uint64_t j = 0;
  for (std::uint64_t i : idx) j = (j << n) | i;
  return j;
}

std::array<std::uint64_t, 4> split_copies(std::uint64_t j, int n) {
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  std::array<std::uint64_t, 4> idx{};
  for (int c = 3; c >= 0; --c) {
    idx[c] = j & mask;
    j >>= n;
  }
  return idx;
}

void check_quadrupled(int n_qubits, std::string_view what) {
  if (n_qubits < 1) throw InvalidArgument(std::string(what) + ": need at least one qubit");
  if (n_qubits > kQuadrupledLimit) {
    throw SizeLimitExceeded(std::string(what) + ": the quadrupled space is limited to N <= " +
                            std::to_string(kQuadrupledLimit));
  }
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

}  // namespace

Matrix evolved_pauli(const Matrix& u, const PauliString& p) {
  Matrix pu(u.rows(), u.cols());
  for (Eigen::Index b = 0; b < u.rows(); ++b) {
    const auto [b2, s] = p.act_on_basis(static_cast<std::uint64_t>(b));
    pu.row(static_cast<Eigen::Index>(b2)) = s * u.row(b);
  }
  return u.adjoint() * pu;
}

double evolved_pauli_entanglement(const DenseOperator& u, const Bipartition& bp, const PauliString& p) {
  require_qubits(u, bp, "evolved_pauli_entanglement");
  if (p.n_qubits() != u.n_qubits()) throw DimensionMismatch("Pauli string and operator sizes differ");
  return linear_entanglement_unchecked(evolved_pauli(u.matrix(), p), bp);
}

PauliPowerEstimate pauli_entangling_power_exact(const DenseOperator& u, const Bipartition& bp,
                                                const ExactOptions& options) {
  check_power_input(u, bp, options.max_qubits, "pauli_entangling_power_exact");
  const int n = u.n_qubits();
  const std::uint64_t count = pauli_count(n);
  PauliPowerEstimate est;
  est.mode = PowerMode::kExact;
  est.n_samples = count;
  if (options.route == ExactRoute::kPerPauli) {
    const double total = deterministic_sum(count, 16, [&](std::size_t i) {
      return linear_entanglement_unchecked(evolved_pauli(u.matrix(), PauliString::from_index(n, i)), bp);
    });
    est.value = total / static_cast<double>(count);
    return est;
  }
  const bool lead_a = bp.n_a <= bp.n_b;
  const Matrix m = lead_a ? u.matrix() : trailing_first(u.matrix(), bp);
  const int n_lead = lead_a ? bp.n_a : bp.n_b;
  est.value = options.route == ExactRoute::kLocalCoefficients ? local_coefficient_pass(m, n_lead).pauli_power
                                                              : gram_pass(m, n_lead);
  return est;
}

PauliPowerEstimate pauli_entangling_power_sampled(const DenseOperator& u, const Bipartition& bp, RngStream& rng,
                                                  const SamplingOptions& options) {
  check_power_input(u, bp, PauliString::kMaxQubits, "pauli_entangling_power_sampled");
  if (options.fixed_count == 0 && !(options.sem_target > 0.0)) {
    throw InvalidArgument("sampling needs a positive sem_target or a fixed count");
  }
  const int n = u.n_qubits();
  const std::uint64_t cap = options.fixed_count != 0 ? options.fixed_count : options.max_samples;
  const std::size_t batch = std::max<std::size_t>(1, options.batch);
  RunningStats stats;
  bool done = false;
  while (!done && stats.count() < cap) {
    const std::size_t m = static_cast<std::size_t>(std::min<std::uint64_t>(batch, cap - stats.count()));
    const std::vector<PauliString> ps = sample_paulis(n, rng, m);
    std::vector<double> values(m);
    parallel_blocks(m, [&](std::size_t i) {
      values[i] = linear_entanglement_unchecked(evolved_pauli(u.matrix(), ps[i]), bp);
    });
    for (double v : values) {
      stats.add(v);
      if (options.fixed_count == 0 && stats.count() >= options.min_samples &&
          options.z * stats.sem() < options.sem_target) {
        done = true;
        break;
      }
    }
  }
  return {stats.mean(), PowerMode::kSampled, stats.count(), stats.sem()};
}

LocalMagicBounds local_pauli_magic_bound(const DenseOperator& u, const Bipartition& bp, int max_qubits) {
  check_power_input(u, bp, max_qubits, "local_pauli_magic_bound");
  LocalMagicBounds b;
  b.bound_a = local_coefficient_pass(u.matrix(), bp.n_a).mean_operator_magic;
  b.bound_b = local_coefficient_pass(trailing_first(u.matrix(), bp), bp.n_b).mean_operator_magic;
  return b;
}

Matrix q_projector_build(int n_qubits) {
  check_quadrupled(n_qubits, "q_projector_build");
  const std::uint64_t d = std::uint64_t{1} << n_qubits;
  const auto dim = static_cast<Eigen::Index>(d * d * d * d);
  Matrix q = Matrix::Zero(dim, dim);
  const double norm = 1.0 / static_cast<double>(d * d);
  for (const PauliString& p : enumerate_paulis(n_qubits)) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      auto idx = split_copies(static_cast<std::uint64_t>(j), n_qubits);
      cplx s = norm;
      for (auto& i : idx) {
        const auto [i2, f] = p.act_on_basis(i);
        i = i2;
        s *= f;
      }
      q(static_cast<Eigen::Index>(copy_major_index(idx, n_qubits)), j) += s;
    }
  }
  return q;
}

Matrix q_projector_from_lambda(int n_qubits) {
  check_quadrupled(n_qubits, "q_projector_from_lambda");
  const Matrix lambda = 4.0 * q_projector_build(1);
  Matrix site_major = lambda;
  for (int k = 1; k < n_qubits; ++k) site_major = kron(site_major, lambda);
  const Matrix q = site_major_to_copy_major(site_major, n_qubits);
  const double d = static_cast<double>(std::uint64_t{1} << n_qubits);
  return q / (d * d);
}

Matrix site_major_to_copy_major(const Matrix& m, int n_sites) {
  const int n = n_sites;
  if (m.rows() != m.cols() || m.rows() != (Eigen::Index{1} << (4 * n))) {
    throw DimensionMismatch("expected an operator on four copies of " + std::to_string(n) + " qubits");
  }
  // Site-major bit of (copy c, site k) is at 4(N-1-k) + (3-c); copy-major at N(3-c) + (N-1-k).
  auto to_site_major = [n](std::uint64_t j) {
    std::uint64_t s = 0;
    for (int c = 0; c < 4; ++c) {
      for (int k = 0; k < n; ++k) {
        if ((j >> (n * (3 - c) + (n - 1 - k))) & 1u) s |= std::uint64_t{1} << (4 * (n - 1 - k) + (3 - c));
      }
    }
    return static_cast<Eigen::Index>(s);
  };
  const Eigen::Index dim = m.rows();
  Matrix out(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    const Eigen::Index sc = to_site_major(static_cast<std::uint64_t>(c));
    for (Eigen::Index r = 0; r < dim; ++r) out(r, c) = m(to_site_major(static_cast<std::uint64_t>(r)), sc);
  }
  return out;
}

Matrix q_supplemental_basis(int n_qubits) {
  check_quadrupled(n_qubits, "q_supplemental_basis");
  const std::uint64_t d = std::uint64_t{1} << n_qubits;
  const auto d2 = static_cast<Eigen::Index>(d * d);
  Matrix basis(d2 * d2, d2);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::uint64_t z = 0; z < d; ++z) {
    for (std::uint64_t x = 0; x < d; ++x) {
      Vector psi = Vector::Zero(d2);
      for (std::uint64_t y = 0; y < d; ++y) {
        psi(static_cast<Eigen::Index>(y * d + (y ^ x))) = (std::popcount(y & z) % 2 ? -amp : amp);
      }
      Vector twice(d2 * d2);
      for (Eigen::Index i = 0; i < d2; ++i) twice.segment(i * d2, d2) = psi(i) * psi;
      basis.col(static_cast<Eigen::Index>(x | (z << n_qubits))) = twice;
    }
  }
  return basis;
}

double pauli_power_via_q(const DenseOperator& u, const Bipartition& bp) {
  require_qubits(u, bp, "pauli_power_via_q");
  check_quadrupled(u.n_qubits(), "pauli_power_via_q");
  require_unitary(u, 1e-8, "pauli_power_via_q");
  const int n = u.n_qubits();
  const Matrix& m = u.matrix();
  const Matrix u4 = kron(kron(m, m), kron(m, m));
  const Matrix m4 = u4.adjoint() * q_projector_build(n) * u4;
  // T^A_{(12)(34)} exchanges the A halves of copies 1,2 and of copies 3,4.
  const std::uint64_t db = bp.d_b();
  auto swap_a = [db](std::uint64_t i, std::uint64_t j) { return (j / db) * db + i % db; };
  cplx tr = 0.0;
  for (Eigen::Index j = 0; j < m4.cols(); ++j) {
    auto idx = split_copies(static_cast<std::uint64_t>(j), n);
    const std::array<std::uint64_t, 4> t = {swap_a(idx[0], idx[1]), swap_a(idx[1], idx[0]), swap_a(idx[2], idx[3]),
                                            swap_a(idx[3], idx[2])};
    tr += m4(j, static_cast<Eigen::Index>(copy_major_index(t, n)));
  }
  const double d = static_cast<double>(bp.d());
  return 1.0 - tr.real() / (d * d);
}

HaarTypical haar_typical_value(std::uint64_t d, std::uint64_t d_a) {
  if (d < 2 || d_a < 1 || !std::has_single_bit(d) || !std::has_single_bit(d_a) || d_a > d) {
    throw InvalidArgument("haar_typical_value needs powers of two with d_A dividing d, got d=" + std::to_string(d) +
                          ", d_A=" + std::to_string(d_a));
  }
  const double dd = static_cast<double>(d) * static_cast<double>(d);
  const double da2 = static_cast<double>(d_a) * static_cast<double>(d_a);
  const double db = static_cast<double>(d / d_a);
  HaarTypical h;
  h.value = (dd - da2) * (dd - 10.0) * (da2 - 1.0) / (dd * da2 * (dd - 9.0));
  h.expansion = 1.0 - (1.0 - 1.0 / dd) / da2 - (1.0 - 1.0 / dd) / (db * db);
  return h;
}

HaarMonteCarlo haar_pauli_power_monte_carlo(const Bipartition& bp, std::uint64_t n_samples, const RngStream& rng) {
  RunningStats stats;
  for (std::uint64_t s = 0; s < n_samples; ++s) {
    RngStream r = rng.split(s);
    const DenseOperator u = haar_random_unitary(bp.n(), r);
    stats.add(pauli_entangling_power_exact(u, bp).value);
  }
  return {stats.mean(), stats.sem(), stats.count()};
}

std::string_view s4_class_name(S4Class c) {
  switch (c) {
    case S4Class::kIdentity: return "e";
    case S4Class::kTransposition: return "(34)";
    case S4Class::kDoubleTransposition: return "(12)(34)";
    case S4Class::kThreeCycle: return "(123)";
    case S4Class::kFourCycle: return "(1234)";
  }
  return "?";
}

std::array<double, 5> q_permutation_traces(int n_qubits) {
  const Matrix q = q_projector_build(n_qubits);
  // T_sigma |i_1 i_2 i_3 i_4> = |i_src[0] i_src[1] i_src[2] i_src[3]>.
  constexpr std::array<std::array<int, 4>, 5> sources = {{
      {0, 1, 2, 3},
      {0, 1, 3, 2},
      {1, 0, 3, 2},
      {2, 0, 1, 3},
      {3, 0, 1, 2},
  }};
  std::array<double, 5> out{};
  for (std::size_t s = 0; s < sources.size(); ++s) {
    cplx tr = 0.0;
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
      const auto idx = split_copies(static_cast<std::uint64_t>(j), n_qubits);
      std::array<std::uint64_t, 4> t{};
      for (int c = 0; c < 4; ++c) t[c] = idx[sources[s][c]];
      tr += q(j, static_cast<Eigen::Index>(copy_major_index(t, n_qubits)));
    }
    out[s] = tr.real();
  }
  return out;
}

}  // namespace paulient
