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

#include "paulient/clifford.hpp"

#include <sstream>
#include <string>

#include "paulient/error.hpp"

namespace paulient {

namespace {

PauliString generator(int n, int r) {
  const std::uint64_t b = std::uint64_t{1} << (n - 1 - (r % n));
  return r < n ? PauliString(n, b, 0) : PauliString(n, 0, b);
}

bool anticommute(const PauliString& a, const PauliString& b) { return !pauli_commutes(a, b); }

}  // namespace

CliffordTableau CliffordTableau::identity(int n_qubits) {
  std::vector<PauliString> images;
  images.reserve(2 * static_cast<std::size_t>(n_qubits));
  for (int r = 0; r < 2 * n_qubits; ++r) images.push_back(generator(n_qubits, r));
  return {n_qubits, std::move(images)};
}

CliffordTableau CliffordTableau::hadamard(int n_qubits, int q) {
  CliffordTableau t = identity(n_qubits);
  std::swap(t.images_[q], t.images_[n_qubits + q]);
  return t;
}

CliffordTableau CliffordTableau::phase_s(int n_qubits, int q) {
  CliffordTableau t = identity(n_qubits);
  t.images_[q] = PauliString::single(n_qubits, q, 'Y');
  return t;
}

CliffordTableau CliffordTableau::cnot(int n_qubits, int control, int target) {
  if (control == target) throw InvalidArgument("cnot control equals target");
  CliffordTableau t = identity(n_qubits);
  const PauliString& xc = t.images_[control];
  const PauliString& xt = t.images_[target];
  t.images_[control] = pauli_multiply(xc, xt).result;
  const PauliString& zc = t.images_[n_qubits + control];
  const PauliString& zt = t.images_[n_qubits + target];
  t.images_[n_qubits + target] = pauli_multiply(zc, zt).result;
  return t;
}

std::vector<std::vector<std::uint8_t>> CliffordTableau::symplectic_matrix() const {
  std::vector<std::vector<std::uint8_t>> m(2 * static_cast<std::size_t>(n_),
                                           std::vector<std::uint8_t>(2 * static_cast<std::size_t>(n_), 0));
  for (int r = 0; r < 2 * n_; ++r) {
    for (int k = 0; k < n_; ++k) {
      m[r][k] = images_[r].x_at(k);
      m[r][n_ + k] = images_[r].z_at(k);
    }
  }
  return m;
}

std::vector<std::uint8_t> CliffordTableau::sign_bits() const {
  std::vector<std::uint8_t> s;
  s.reserve(images_.size());
  for (const auto& p : images_) s.push_back(p.phase_exp() == 2 ? 1 : 0);
  return s;
}

bool CliffordTableau::preserves_symplectic_form() const {
  for (int r = 0; r < 2 * n_; ++r) {
    for (int s = r + 1; s < 2 * n_; ++s) {
      const bool expected = (s == r + n_);  // only X_i, Z_i anticommute
      if (anticommute(images_[r], images_[s]) != expected) return false;
    }
  }
  return true;
}

PauliString CliffordTableau::conjugate_with_phase(const PauliString& p) const {
  if (p.n_qubits() != n_) {
    throw DimensionMismatch("conjugating a " + std::to_string(p.n_qubits()) + "-qubit string by a " +
                            std::to_string(n_) + "-qubit tableau");
  }
  // p = i^{phase + |x&z|} prod_k X_k^{x_k} Z_k^{z_k}
  PauliString acc(n_, 0, 0, p.phase_exp() + std::popcount(p.x_mask() & p.z_mask()));
  for (int k = 0; k < n_; ++k) {
    if (p.x_at(k)) {
      const PauliProduct m = pauli_multiply(acc, images_[k]);
      acc = m.result.with_phase(m.cocycle_exp);
    }
    if (p.z_at(k)) {
      const PauliProduct m = pauli_multiply(acc, images_[n_ + k]);
      acc = m.result.with_phase(m.cocycle_exp);
    }
  }
  return acc;
}

SignedPauli CliffordTableau::conjugate(const PauliString& p) const {
  if (!p.is_hermitian()) throw InvalidArgument("conjugate expects a Hermitian Pauli string, got " + p.str());
  const PauliString r = conjugate_with_phase(p);
  return {r.canonical(), r.phase_exp() == 0 ? 1 : -1};
}

CliffordTableau CliffordTableau::inverse() const {
  // If C^dagger g C = s * prod_j X_j^{a_j} Z_j^{b_j} then a_j = w(g, Z'_j) and
  // b_j = w(g, X'_j) with w the symplectic form; the sign follows by pushing the
  // candidate back through C.
  std::vector<PauliString> inv;
  inv.reserve(images_.size());
  for (int r = 0; r < 2 * n_; ++r) {
    const PauliString g = generator(n_, r);
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    for (int j = 0; j < n_; ++j) {
      const std::uint64_t bit = std::uint64_t{1} << (n_ - 1 - j);
      if (anticommute(g, images_[n_ + j])) a |= bit;
      if (anticommute(g, images_[j])) b |= bit;
    }
    const PauliString candidate(n_, a, b, 0);
    const SignedPauli back = conjugate(candidate);
    if (back.result != g) throw InvalidGeneratorImages("tableau is not invertible (symplectic form violated)");
    inv.push_back(back.sign > 0 ? candidate : candidate.negated());
  }
  return {n_, std::move(inv)};
}

CliffordTableau CliffordTableau::then(const CliffordTableau& next) const {
  if (next.n_ != n_) throw DimensionMismatch("composing tableaux of different sizes");
  std::vector<PauliString> out;
  out.reserve(images_.size());
  for (const auto& img : images_) out.push_back(next.conjugate_with_phase(img));
  return {n_, std::move(out)};
}

std::string CliffordTableau::to_text() const {
  std::ostringstream os;
  os << "tableau " << n_ << '\n';
  for (const auto& img : images_) {
    for (int k = 0; k < n_; ++k) os << (img.x_at(k) ? '1' : '0');
    os << ' ';
    for (int k = 0; k < n_; ++k) os << (img.z_at(k) ? '1' : '0');
    os << ' ' << (img.phase_exp() == 2 ? '-' : '+') << '\n';
  }
  os << "end\n";
  return os.str();
}

CliffordTableau CliffordTableau::from_text(const std::string& text) {
  std::istringstream is(text);
  std::string word;
  int n = 0;
  if (!(is >> word >> n) || word != "tableau" || n < 1 || n > PauliString::kMaxQubits) {
    throw ParseError("tableau block must start with 'tableau N'");
  }
  std::vector<SignedPauli> images;
  for (int r = 0; r < 2 * n; ++r) {
    std::string xs;
    std::string zs;
    std::string sign;
    if (!(is >> xs >> zs >> sign) || xs.size() != static_cast<std::size_t>(n) ||
        zs.size() != static_cast<std::size_t>(n) || (sign != "+" && sign != "-")) {
      throw ParseError("malformed tableau row " + std::to_string(r));
    }
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (int k = 0; k < n; ++k) {
      const std::uint64_t bit = std::uint64_t{1} << (n - 1 - k);
      if (xs[k] == '1') x |= bit; else if (xs[k] != '0') throw ParseError("tableau bits must be 0/1");
      if (zs[k] == '1') z |= bit; else if (zs[k] != '0') throw ParseError("tableau bits must be 0/1");
    }
    images.push_back({PauliString(n, x, z, 0), sign == "+" ? 1 : -1});
  }
  if (!(is >> word) || word != "end") throw ParseError("tableau block must end with 'end'");
  return clifford_from_generator_images(images);
}

SignedPauli clifford_conjugate_pauli(const CliffordTableau& c, const PauliString& p) { return c.conjugate(p); }

CliffordTableau clifford_from_generator_images(const std::vector<SignedPauli>& images) {
  if (images.empty() || images.size() % 2 != 0) {
    throw InvalidGeneratorImages("expected 2N generator images, got " + std::to_string(images.size()));
  }
  const int n = static_cast<int>(images.size() / 2);
  std::vector<PauliString> stored;
  stored.reserve(images.size());
  for (const auto& [p, sign] : images) {
    if (p.n_qubits() != n) throw InvalidGeneratorImages("image " + p.str() + " has the wrong qubit count");
    if (!p.is_hermitian()) throw InvalidGeneratorImages("image " + p.str() + " is not Hermitian");
    if (sign != 1 && sign != -1) throw InvalidGeneratorImages("sign must be +1 or -1");
    stored.push_back(sign > 0 ? p : p.negated());
  }
  CliffordTableau t(n, std::move(stored));
  if (!t.preserves_symplectic_form()) {
    throw InvalidGeneratorImages("images do not preserve the commutation pattern of the generators");
  }
  return t;
}

CliffordTableau clifford_random(int n_qubits, RngStream& rng) {
  if (n_qubits < 1 || n_qubits > 32) throw InvalidArgument("clifford_random supports 1..32 qubits");
  const std::uint64_t mask = (std::uint64_t{1} << n_qubits) - 1;
  std::vector<PauliString> es;
  std::vector<PauliString> fs;
  // Projects v onto the symplectic complement of the pairs chosen so far.
  auto project = [&](PauliString v) {
    for (std::size_t j = 0; j < es.size(); ++j) {
      const bool a = anticommute(v, fs[j]);
      const bool b = anticommute(v, es[j]);
      if (a) v = pauli_multiply(v, es[j]).result;
      if (b) v = pauli_multiply(v, fs[j]).result;
    }
    return v;
  };
  auto draw = [&] { return PauliString(n_qubits, rng.next_u64() & mask, rng.next_u64() & mask, 0); };
  for (int i = 0; i < n_qubits; ++i) {
    PauliString e = project(draw());
    while (e.is_identity_up_to_phase()) e = project(draw());
    PauliString f = project(draw());
    while (!anticommute(e, f)) f = project(draw());
    es.push_back(e);
    fs.push_back(f);
  }
  std::vector<SignedPauli> images;
  images.reserve(2 * static_cast<std::size_t>(n_qubits));
  for (const auto& e : es) images.push_back({e, rng.coin() ? -1 : 1});
  for (const auto& f : fs) images.push_back({f, rng.coin() ? -1 : 1});
  return clifford_from_generator_images(images);
}

DenseOperator clifford_to_dense(const CliffordTableau& c, int max_qubits) {
  const int n = c.n_qubits();
  check_dense_limit(n, max_qubits, "clifford_to_dense");
  const Eigen::Index d = Eigen::Index{1} << n;
  // Column 0 is the state stabilized by the images of Z_i; column x is
  // prod_i X'_i^{x_i} applied to it.
  Vector psi0;
  for (Eigen::Index j = 0; j < d; ++j) {
    Vector v = Vector::Zero(d);
    v(j) = 1.0;
    for (int i = 0; i < n; ++i) v = 0.5 * (v + apply_pauli(c.z_image(i), v));
    if (v.squaredNorm() > 1e-6 / static_cast<double>(d)) {
      psi0 = v.normalized();
      break;
    }
  }
  if (psi0.size() == 0) throw InvalidGeneratorImages("no state is stabilized by the Z images");
  Matrix m(d, d);
  m.col(0) = psi0;
  for (Eigen::Index x = 1; x < d; ++x) {
    const int low = std::countr_zero(static_cast<std::uint64_t>(x));
    const int site = n - 1 - low;
    m.col(x) = apply_pauli(c.x_image(site), m.col(x & (x - 1)));
  }
  for (Eigen::Index i = 0; i < d; ++i) {
    if (std::abs(m(i, 0)) > 1e-12) {
      const cplx phase = m(i, 0) / std::abs(m(i, 0));
      m *= std::conj(phase);
      break;
    }
  }
  return {n, std::move(m)};
}

}  // namespace paulient
