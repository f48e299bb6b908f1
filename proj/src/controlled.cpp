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

#include "uccsynth/controlled.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "uccsynth/pauli_exp.hpp"

namespace uccsynth {

namespace {

void validate_spec(const ControlledFactorSpec& spec, const JwConvention& conv,
                   const std::vector<PauliRotation>& schedule) {
  if (spec.controls.size() != spec.copy_ancillas.size())
    throw std::invalid_argument("synth_controlled_ucc: one copy ancilla per control required");

  std::set<int> op_orbitals(spec.op.occupied.begin(), spec.op.occupied.end());
  op_orbitals.insert(spec.op.virtuals.begin(), spec.op.virtuals.end());

  std::set<int> control_qubits;
  for (int c : spec.controls) {
    if (op_orbitals.count(c))
      throw std::invalid_argument("synth_controlled_ucc: control overlaps the excitation");
    if (!control_qubits.insert(conv.qubit_of(c)).second)
      throw std::invalid_argument("synth_controlled_ucc: duplicate control");
  }

  // Anything the rotation blocks touch (basis axes and parity chain alike)
  // would corrupt a copy placed on it.
  std::set<int> active;
  for (const auto& rot : schedule)
    for (const auto& [q, axis] : rot.word.axes) active.insert(q);

  std::set<int> copies;
  for (int q : spec.copy_ancillas) {
    if (q < 0 || q >= conv.total_qubits)
      throw std::invalid_argument("synth_controlled_ucc: copy ancilla outside the register");
    if (active.count(q) || control_qubits.count(q))
      throw std::invalid_argument("synth_controlled_ucc: copy ancilla collides with the factor");
    if (!copies.insert(q).second)
      throw std::invalid_argument("synth_controlled_ucc: duplicate copy ancilla");
  }
}

}  // namespace

Circuit synth_controlled_ucc(const ControlledFactorSpec& spec, const JwConvention& conv) {
  if (spec.controls.empty()) return synth_ucc_factor(spec.op, spec.theta, conv);

  auto schedule = ucc_rotation_schedule(spec.op, spec.theta, conv);
  validate_spec(spec, conv, schedule);

  Circuit c{conv.total_qubits, {}};
  for (std::size_t i = 0; i < spec.controls.size(); ++i)
    c.append(Gate::cnot(conv.qubit_of(spec.controls[i]), spec.copy_ancillas[i]));

  for (const auto& rot : schedule) {
    PauliBlock block = pauli_block(rot.word, conv.total_qubits);
    Circuit body{conv.total_qubits, {}};
    for (const auto& g : block.basis) body.append(g);
    for (std::size_t i = 0; i + 1 < block.cascade.size(); ++i)
      body.append(Gate::cnot(block.cascade[i], block.cascade[i + 1]));
    body.append(
        Gate::mcrz(spec.copy_ancillas, block.cascade.back(), block.angle_sign * rot.angle));
    for (std::size_t i = block.cascade.size() - 1; i-- > 0;)
      body.append(Gate::cnot(block.cascade[i], block.cascade[i + 1]));
    for (auto it = block.basis.rbegin(); it != block.basis.rend(); ++it) {
      Gate g = *it;
      if (g.kind == GateKind::RX) g.angle = -g.angle;
      body.append(g);
    }
    c.append(body);
  }

  for (std::size_t i = 0; i < spec.controls.size(); ++i)
    c.append(Gate::cnot(conv.qubit_of(spec.controls[i]), spec.copy_ancillas[i]));
  return c;
}

namespace {

// C^k(RZ(angle)) on controls[0..k) -> target, recursing on the control count.
void lower_rec(Circuit& c, const std::vector<int>& controls, int target, double angle) {
  if (controls.size() == 1) {
    c.append(Gate::rz(target, angle / 2));
    c.append(Gate::cnot(controls[0], target));
    c.append(Gate::rz(target, -angle / 2));
    c.append(Gate::cnot(controls[0], target));
    return;
  }
  std::vector<int> rest(controls.begin() + 1, controls.end());
  lower_rec(c, rest, target, angle / 2);
  c.append(Gate::cnot(controls[0], rest[0]));
  lower_rec(c, rest, target, -angle / 2);
  c.append(Gate::cnot(controls[0], rest[0]));
  std::vector<int> with_first = rest;
  with_first[0] = controls[0];
  lower_rec(c, with_first, target, angle / 2);
}

}  // namespace

Circuit lower_mcrz(const Gate& gate, int n_qubits) {
  if (gate.kind != GateKind::MCRZ)
    throw std::invalid_argument("lower_mcrz: not a multi-controlled rotation");
  int k = static_cast<int>(gate.controls.size());
  if (k < 1 || k > 4)
    throw std::invalid_argument("lower_mcrz: supported control counts are 1..4");
  Circuit c{n_qubits, {}};
  lower_rec(c, gate.controls, gate.target, gate.angle);
  return c;
}

Circuit lower_all_mcrz(const Circuit& c) {
  Circuit out{c.n_qubits, {}};
  for (const auto& g : c.gates) {
    if (g.kind == GateKind::MCRZ)
      out.append(lower_mcrz(g, c.n_qubits));
    else
      out.append(g);
  }
  return out;
}

long long mcrz_cnot_cost(int k) {
  if (k < 1) throw std::invalid_argument("mcrz_cnot_cost: need at least one control");
  long long cost = 2;
  for (int i = 2; i <= k; ++i) cost = 3 * cost + 2;
  return cost;
}

long long mcrz_rotation_cost(int k) {
  if (k < 1) throw std::invalid_argument("mcrz_rotation_cost: need at least one control");
  long long cost = 2;
  for (int i = 2; i <= k; ++i) cost *= 3;
  return cost;
}

}  // namespace uccsynth
