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

#include <vector>

#include "paulient/dense.hpp"
#include "paulient/pauli.hpp"

namespace paulient {

/// Tr(O P) for every phase-0 Pauli string P, indexed by PauliString::index().
///
/// Uses Tr(O P_{x,z}) = i^{|x&z|} sum_b (-1)^{z.b} O[b, b^x]: one Walsh-Hadamard
/// transform over b per shift x, so the full table costs O(d^2 log d).
std::vector<cplx> pauli_coefficients(const Eigen::Ref<const Matrix>& o);

/// Same, writing into `out` (resized to 4^N) so hot loops can reuse storage.
void pauli_coefficients_into(const Eigen::Ref<const Matrix>& o, std::vector<cplx>& out);

/// <psi|P|psi> for every phase-0 Pauli string (real up to round-off).
std::vector<double> pauli_expectations(const Vector& psi);

/// Tr(O P) for a single string, straight from the definition.
cplx pauli_trace(const Matrix& o, const PauliString& p);

/// Qubit count of a square power-of-two matrix; throws DimensionMismatch otherwise.
int qubits_of(const Eigen::Ref<const Matrix>& m);

}  // namespace paulient
