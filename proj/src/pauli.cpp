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

#include "paulient/pauli.hpp"

#include <string>

#include "paulient/error.hpp"

namespace paulient {

namespace {

std::uint64_t low_mask(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

void check_n(int n) {
  if (n < 1 || n > PauliString::kMaxQubits) {
    throw InvalidArgument("Pauli strings support 1.." + std::to_string(PauliString::kMaxQubits) + " qubits, got " +
                          std::to_string(n));
  }
}

}  // namespace

PauliString::PauliString(int n_qubits) : PauliString(n_qubits, 0, 0, 0) {}

PauliString::PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask, int phase_exp)
    : n_(n_qubits), x_(x_mask), z_(z_mask), phase_(((phase_exp % 4) + 4) % 4) {
  check_n(n_qubits);
  if ((x_ | z_) & ~low_mask(n_)) throw InvalidArgument("Pauli mask has bits beyond the qubit count");
}

PauliString PauliString::from_string(std::string_view text) {
  int phase = 0;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase += 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase += 1;
    ++pos;
  }
  const std::string_view body = text.substr(pos);
  const int n = static_cast<int>(body.size());
  if (n == 0) throw ParseError("empty Pauli string '" + std::string(text) + "'");
  check_n(n);
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (int k = 0; k < n; ++k) {
    const std::uint64_t b = std::uint64_t{1} << (n - 1 - k);
    switch (body[k]) {
      case 'I':
      case '_': break;
      case 'X': x |= b; break;
      case 'Z': z |= b; break;
      case 'Y': x |= b; z |= b; break;
      default: throw ParseError("unexpected character '" + std::string(1, body[k]) + "' in Pauli string");
    }
  }
  return {n, x, z, phase};
}

PauliString PauliString::from_index(int n_qubits, std::uint64_t index) {
  check_n(n_qubits);
  if (n_qubits > 32) throw InvalidArgument("index enumeration supports at most 32 qubits");
  const std::uint64_t m = low_mask(n_qubits);
  return {n_qubits, index & m, (index >> n_qubits) & m, 0};
}

PauliString PauliString::single(int n_qubits, int site, char op) {
  if (site < 0 || site >= n_qubits) throw InvalidArgument("site out of range");
  std::string s(static_cast<std::size_t>(n_qubits), 'I');
  s[static_cast<std::size_t>(site)] = op;
  return from_string(s);
}

char PauliString::op_at(int site) const {
  static constexpr char kOps[4] = {'I', 'X', 'Z', 'Y'};
  return kOps[static_cast<int>(x_at(site)) | (static_cast<int>(z_at(site)) << 1)];
}

std::pair<std::uint64_t, cplx> PauliString::act_on_basis(std::uint64_t b) const {
  const int e = phase_ + std::popcount(x_ & z_) + 2 * std::popcount(z_ & b);
  return {b ^ x_, i_pow(e)};
}

std::string PauliString::str() const {
  static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  std::string s = kPrefix[phase_];
  s.reserve(s.size() + static_cast<std::size_t>(n_));
  for (int k = 0; k < n_; ++k) s.push_back(op_at(k));
  return s;
}

PauliProduct pauli_multiply(const PauliString& p, const PauliString& q) {
  if (p.n_qubits() != q.n_qubits()) {
    throw DimensionMismatch("multiplying Pauli strings on " + std::to_string(p.n_qubits()) + " and " +
                            std::to_string(q.n_qubits()) + " qubits");
  }
  const std::uint64_t x = p.x_mask() ^ q.x_mask();
  const std::uint64_t z = p.z_mask() ^ q.z_mask();
  // Per site: i^{x1 z1} X^x1 Z^z1 i^{x2 z2} X^x2 Z^z2 = i^{x1z1 + x2z2 - x3z3} (-1)^{z1 x2} s(x3, z3).
  const int e = p.phase_exp() + q.phase_exp() + std::popcount(p.x_mask() & p.z_mask()) +
                std::popcount(q.x_mask() & q.z_mask()) - std::popcount(x & z) +
                2 * std::popcount(p.z_mask() & q.x_mask());
  return {PauliString(p.n_qubits(), x, z, 0), ((e % 4) + 4) % 4};
}

bool pauli_commutes(const PauliString& p, const PauliString& q) {
  if (p.n_qubits() != q.n_qubits()) throw DimensionMismatch("commutator of Pauli strings with different sizes");
  return (std::popcount((p.x_mask() & q.z_mask()) ^ (p.z_mask() & q.x_mask())) & 1) == 0;
}

DenseOperator pauli_to_dense(const PauliString& p, int max_qubits) {
  check_dense_limit(p.n_qubits(), max_qubits, "pauli_to_dense");
  const std::uint64_t d = std::uint64_t{1} << p.n_qubits();
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::uint64_t b = 0; b < d; ++b) {
    const auto [row, s] = p.act_on_basis(b);
    m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(b)) = s;
  }
  return {p.n_qubits(), std::move(m)};
}

Vector apply_pauli(const PauliString& p, const Vector& v) {
  const std::uint64_t d = static_cast<std::uint64_t>(v.size());
  if (d != (std::uint64_t{1} << p.n_qubits())) throw DimensionMismatch("apply_pauli: vector length");
  Vector out(v.size());
  for (std::uint64_t b = 0; b < d; ++b) {
    const auto [row, s] = p.act_on_basis(b);
    out(static_cast<Eigen::Index>(row)) = s * v(static_cast<Eigen::Index>(b));
  }
  return out;
}

std::uint64_t pauli_count(int n_qubits, std::uint64_t budget) {
  check_n(n_qubits);
  if (2 * n_qubits >= 64 || (std::uint64_t{1} << (2 * n_qubits)) > budget) {
    throw SizeLimitExceeded("4^" + std::to_string(n_qubits) + " Pauli strings exceed the iteration budget of " +
                            std::to_string(budget));
  }
  return std::uint64_t{1} << (2 * n_qubits);
}

PauliString sample_pauli(int n_qubits, RngStream& rng) {
  check_n(n_qubits);
  const std::uint64_t m = low_mask(n_qubits);
  const std::uint64_t x = rng.next_u64() & m;
  const std::uint64_t z = rng.next_u64() & m;
  return {n_qubits, x, z, 0};
}

std::vector<PauliString> sample_paulis(int n_qubits, RngStream& rng, std::size_t count) {
  std::vector<PauliString> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample_pauli(n_qubits, rng));
  return out;
}

}  // namespace paulient
