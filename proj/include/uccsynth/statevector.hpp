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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "uccsynth/circuit.hpp"
#include "uccsynth/fermion.hpp"

namespace uccsynth {

/// Dense simulation refuses registers larger than this; 2^18 amplitudes is
/// the largest case the verification suite drives.
inline constexpr int kMaxSimQubits = 18;

/// Dense state over n qubits; amps[i] is the amplitude of the basis state
/// whose bit q is the occupation of qubit q (qubit 0 = least significant).
struct StateVector {
  int n_qubits = 0;
  std::vector<cdouble> amps;

  explicit StateVector(int n_qubits);
  static StateVector basis_state(int n_qubits, std::uint64_t index);

  std::uint64_t dim() const { return amps.size(); }
  double norm() const;
  void normalize();
};

void apply_gate(StateVector& state, const Gate& g);
void apply_circuit(StateVector& state, const Circuit& c);

/// Exact action of exp(theta (A - A^dag)) on the state, computed from the
/// closed-form determinant-pair rotation: every basis determinant that A
/// excites rotates against its image with the Jordan-Wigner sign, all other
/// determinants pass through unchanged (bit-exactly). This path never
/// builds matrices or circuits, so it serves as the reference the circuit
/// backends are checked against.
void apply_ucc_factor_exact(StateVector& state, const ExcitationOperator& op,
                            double theta, const JwConvention& conv);

/// Dense matrix of the generator A - A^dag.
Eigen::MatrixXcd generator_matrix(const ExcitationOperator& op, const JwConvention& conv,
                                  int oracle_cap = kDefaultOracleQubitCap);

/// exp(theta (A - A^dag)) by eigendecomposition of the (Hermitian)
/// i-times-generator. Independent of both the circuit synthesis and the
/// determinant-pair path.
Eigen::MatrixXcd matrix_exponential_oracle(const ExcitationOperator& op, double theta,
                                           const JwConvention& conv,
                                           int oracle_cap = kDefaultOracleQubitCap);

/// Applies exp(theta (A - A^dag)) to a state through a scaled Taylor
/// series in the generator's Pauli form. Complements the dense oracle on
/// registers too large for an explicit matrix.
void apply_generator_exponential(StateVector& state, const ExcitationOperator& op,
                                 double theta, const JwConvention& conv);

/// Largest absolute amplitude difference. No global-phase quotient: a pure
/// phase discrepancy counts as a deviation.
double deviation(const StateVector& a, const StateVector& b);

struct SectorRestriction {
  StateVector reduced;     // renormalized all-ancillas-|0> slice
  double leaked_weight;    // total probability outside that slice
};

/// Restricts to the sector where every listed qubit is |0>, compacting the
/// remaining qubits in ascending order. The slice is renormalized unless it
/// carries no weight at all.
SectorRestriction sector_restrict(const StateVector& state, const std::vector<int>& zero_qubits);

/// Text dump: one "bitstring re im" line per amplitude above the threshold,
/// ascending basis index, qubit 0 as the leftmost character.
std::string dump_state(const StateVector& state, double threshold = 1e-12);
StateVector parse_state(const std::string& text, int n_qubits);

/// Deterministic per-case generator: the same (seed, case_id) pair always
/// yields the same stream regardless of how cases are scheduled.
std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t case_id);

/// Haar-ish random state: i.i.d. complex normal amplitudes, normalized.
StateVector random_state(int n_qubits, std::mt19937_64& rng);

/// Random state supported on the given basis indices only.
StateVector random_state_on_support(int n_qubits, const std::vector<std::uint64_t>& support,
                                    std::mt19937_64& rng);

}  // namespace uccsynth
