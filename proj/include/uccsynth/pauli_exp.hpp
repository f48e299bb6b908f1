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

#include <vector>

#include "uccsynth/circuit.hpp"
#include "uccsynth/fermion.hpp"
#include "uccsynth/pauli.hpp"

namespace uccsynth {

/// XOR of an occupation bitstring; the value the CNOT cascade leaves on its
/// terminus qubit.
int parity_of_cascade(const std::vector<int>& bits);

/// Skeleton of one Pauli-exponential block, exposed so other synthesis
/// passes can splice a different rotation into the middle.
struct PauliBlock {
  std::vector<Gate> basis;   // forward basis-change layer (H / RX(-pi/2))
  std::vector<int> cascade;  // active qubits, ascending; back() is the terminus
  double angle_sign = 1.0;   // (-1)^{#Y}, folded into the central rotation
};

PauliBlock pauli_block(const PauliString& word, int n_qubits);

/// Circuit for exp(-i theta/2 P): basis layer, CNOT cascade onto the highest
/// active qubit, RZ there, mirrored cascade, inverse basis layer. The word's
/// coefficient is ignored; it must have at least one non-identity axis.
Circuit synth_pauli_exponential(const PauliString& word, double theta, int n_qubits);

/// One rotation block of a product formula: implements
/// exp(-i angle/2 * word), coefficient of `word` ignored.
struct PauliRotation {
  PauliString word;
  double angle = 0.0;
};

/// The signed per-term schedule whose product equals exp(theta (A - A^dag)),
/// in canonical term order. All words commute, so any reordering yields the
/// same unitary.
std::vector<PauliRotation> ucc_rotation_schedule(const ExcitationOperator& op, double theta,
                                                 const JwConvention& conv);

Circuit synth_schedule(const std::vector<PauliRotation>& schedule, int n_qubits);

/// Circuit for the whole factor exp(theta (A - A^dag)).
Circuit synth_ucc_factor(const ExcitationOperator& op, double theta, const JwConvention& conv);

}  // namespace uccsynth
