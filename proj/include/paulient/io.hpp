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

#include <iosfwd>
#include <string>

#include "paulient/dense.hpp"
#include "paulient/mpu.hpp"
#include "paulient/theorem1.hpp"

namespace paulient::io {

// Text formats. Blank lines and anything after '#' are ignored.
//
// Matrix:
//   matrix <n_qubits>
//   <re> <im> <re> <im> ...        d*d pairs in row-major order, any line breaks
//   end
//
// MPU tensor:
//   mpu <chi>
//   <re> <im> ...                  chi*chi*4 pairs, index order (l, r, out, in), `in` fastest
//   end
//
// Clifford tableaux use CliffordTableau::to_text / from_text.

void write_matrix(std::ostream& os, const DenseOperator& m);
DenseOperator read_matrix(std::istream& is);

void write_mpu(std::ostream& os, const MpuTensor& a);
MpuTensor read_mpu(std::istream& is);

DenseOperator load_matrix(const std::string& path);
void save_matrix(const std::string& path, const DenseOperator& m);
MpuTensor load_mpu(const std::string& path);

/// Factorization report: the V and W blocks, the tableau of C, the global
/// phase and the reconstruction residual.
void write_factorization(std::ostream& os, const LocalCliffordFactorization& f, const FactorizationCheck& check);

/// Strips comments and returns whitespace-separated tokens.
std::string strip_comments(std::istream& is);

}  // namespace paulient::io
