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

#include "paulient/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "paulient/error.hpp"

namespace paulient::io {

std::string strip_comments(std::istream& is) {
  std::string out;
  std::string line;
  while (std::getline(is, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    out += line;
    out += '\n';
  }
  return out;
}

namespace {

void write_pairs(std::ostream& os, const cplx* data, std::size_t count, std::size_t per_line) {
  os << std::setprecision(17);
  for (std::size_t i = 0; i < count; ++i) {
    os << data[i].real() << ' ' << data[i].imag();
    os << ((i + 1) % per_line == 0 ? '\n' : ' ');
  }
}

std::vector<cplx> read_pairs(std::istringstream& in, std::size_t count, const char* what) {
  std::vector<cplx> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    double re = 0.0, im = 0.0;
    if (!(in >> re >> im)) {
      throw ParseError(std::string(what) + ": expected " + std::to_string(count) + " complex entries, got " +
                       std::to_string(i));
    }
    out[i] = {re, im};
  }
  std::string tail;
  if (!(in >> tail) || tail != "end") throw ParseError(std::string(what) + ": missing 'end' after the entries");
  if (in >> tail) throw ParseError(std::string(what) + ": trailing content '" + tail + "'");
  return out;
}

int read_header(std::istringstream& in, const std::string& keyword, int lo, int hi) {
  std::string word;
  int value = 0;
  if (!(in >> word) || word != keyword) throw ParseError("expected header '" + keyword + " <int>'");
  if (!(in >> value)) throw ParseError("'" + keyword + "' header needs an integer");
  if (value < lo || value > hi) {
    throw ParseError(keyword + " size " + std::to_string(value) + " outside [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
  }
  return value;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "'");
  return f;
}

}  // namespace

void write_matrix(std::ostream& os, const DenseOperator& m) {
  const auto d = static_cast<std::size_t>(m.matrix().rows());
  os << "matrix " << m.n_qubits() << '\n';
  const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rm = m.matrix();
  write_pairs(os, rm.data(), d * d, d);
  os << "end\n";
}

DenseOperator read_matrix(std::istream& is) {
  std::istringstream in(strip_comments(is));
  const int n = read_header(in, "matrix", 0, kDefaultDenseLimit);
  const Eigen::Index d = Eigen::Index{1} << n;
  const std::vector<cplx> v = read_pairs(in, static_cast<std::size_t>(d * d), "matrix");
  Matrix m(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) m(r, c) = v[static_cast<std::size_t>(r * d + c)];
  }
  return {n, std::move(m)};
}

void write_mpu(std::ostream& os, const MpuTensor& a) {
  os << "mpu " << a.chi() << '\n';
  write_pairs(os, a.data().data(), a.data().size(), 4);
  os << "end\n";
}

MpuTensor read_mpu(std::istream& is) {
  std::istringstream in(strip_comments(is));
  const int chi = read_header(in, "mpu", 1, 16);
  const auto count = static_cast<std::size_t>(chi) * chi * 4;
  return {chi, read_pairs(in, count, "mpu")};
}

DenseOperator load_matrix(const std::string& path) {
  auto f = open_in(path);
  return read_matrix(f);
}

void save_matrix(const std::string& path, const DenseOperator& m) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write '" + path + "'");
  write_matrix(f, m);
}

MpuTensor load_mpu(const std::string& path) {
  auto f = open_in(path);
  return read_mpu(f);
}

void write_factorization(std::ostream& os, const LocalCliffordFactorization& f, const FactorizationCheck& check) {
  os << "# U^dagger = global_phase * (V x W) * C\n";
  os << std::setprecision(17);
  os << "global_phase " << f.global_phase.real() + 0.0 << ' ' << f.global_phase.imag() + 0.0 << '\n';
  os << "residual " << check.residual << '\n';
  if (check.corollary_checked) os << "max_local_magic " << check.max_local_magic << '\n';
  os << "# V\n";
  write_matrix(os, f.v);
  os << "# W\n";
  write_matrix(os, f.w);
  os << "# C\n";
  os << f.c.to_text();
}

}  // namespace paulient::io
