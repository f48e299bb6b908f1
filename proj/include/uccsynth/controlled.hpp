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

namespace uccsynth {

/// A UCC factor applied only where all listed control orbitals are occupied.
/// The controls may sit inside the factor's parity-cascade span, where their
/// values get scrambled mid-block, so each control is first copied onto a
/// clean ancilla qubit and the rotations condition on the copies.
struct ControlledFactorSpec {
  std::vector<int> controls;       // orbital indices, occupancy-conditioned
  ExcitationOperator op;
  double theta = 0.0;
  std::vector<int> copy_ancillas;  // raw qubit indices, one per control, |0> on entry
};

/// Emits: control-to-ancilla copy CNOTs, the factor's rotation blocks with
/// each central RZ replaced by an MCRZ on the copy ancillas, and the copy
/// CNOTs again to restore the ancillas. With no controls this is exactly
/// synth_ucc_factor. MCRZ gates are left unlowered; see lower_all_mcrz.
Circuit synth_controlled_ucc(const ControlledFactorSpec& spec, const JwConvention& conv);

/// CNOT + single-qubit-rotation circuit for one MCRZ with 1..4 controls,
/// via the square-root recursion: C^k(RZ(t)) splits into two C^{k-1}(RZ(t/2))
/// blocks and one C^{k-1}(RZ(-t/2)) block around a CNOT pair.
Circuit lower_mcrz(const Gate& gate, int n_qubits);

/// Copy of the circuit with every MCRZ lowered in place.
Circuit lower_all_mcrz(const Circuit& c);

/// Costs of the lowering above: cnot(k) = 3 cnot(k-1) + 2 with cnot(1) = 2,
/// i.e. 2, 8, 26, 80; rotations(k) = 2 * 3^{k-1}.
long long mcrz_cnot_cost(int k);
long long mcrz_rotation_cost(int k);

}  // namespace uccsynth
