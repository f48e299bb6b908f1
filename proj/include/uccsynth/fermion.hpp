// Copyright 2026 The uccsynth developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "uccsynth/pauli.hpp"

namespace uccsynth {

/// Mapping from spin-orbital labels to qubit positions. The default is the
/// identity; permuted maps let verification sweeps interleave orbitals
/// without touching any operator definitions.
///
/// Convention: orbital p maps to sigma/sigma^dag on qubit_of(p) with a Z
/// chain on every qubit of strictly larger index, and |0> means empty.
struct JwConvention {
  int total_qubits = 0;
  std::vector<int> orbital_to_qubit;  // injective into [0, total_qubits)

  static JwConvention identity(int n_qubits);

  int num_orbitals() const { return static_cast<int>(orbital_to_qubit.size()); }
  int qubit_of(int orbital) const;
  void validate() const;
};

/// A rank-n excitation A = a^dag_{v1} ... a^dag_{vn} a_{on} ... a_{o1}:
/// annihilation in listed occupied order (o1 acts first), creation in
/// reverse listed virtual order (v1 acts last).
struct ExcitationOperator {
  std::vector<int> occupied;
  std::vector<int> virtuals;

  int rank() const { return static_cast<int>(occupied.size()); }
  void validate() const;  // rank 1..6, disjoint, distinct, non-negative
};

std::string to_string(const ExcitationOperator& op);

/// Parses the "A[i1,i2->a1,a2]" notation.
ExcitationOperator parse_excitation(const std::string& text);

/// Pauli form of a single ladder operator under the convention.
PauliSum jw_ladder(int orbital, bool dagger, const JwConvention& conv);

/// Pauli form of the anti-Hermitian generator A - A^dag. A rank-n operator
/// expands to exactly 2^{2n-1} words, each with an odd number of X and an
/// odd number of Y axes, and all words mutually commute.
PauliSum jw_generator(const ExcitationOperator& op, const JwConvention& conv);

/// For each term pair of a sum, the number of indices on which the words
/// anticommute (even entries everywhere certify mutual commutation).
struct CommutationReport {
  std::vector<PauliString> terms;
  Eigen::MatrixXi counts;
};

CommutationReport pairwise_commutation_report(const PauliSum& sum);

}  // namespace uccsynth
