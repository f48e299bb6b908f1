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

#include "uccsynth/pauli_exp.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace uccsynth {

int parity_of_cascade(const std::vector<int>& bits) {
  int parity = 0;
  for (int b : bits) parity ^= (b != 0);
  return parity;
}

PauliBlock pauli_block(const PauliString& word, int n_qubits) {
  if (word.axes.empty())
    throw std::invalid_argument("pauli_block: word has no non-identity axis");
  if (word.max_qubit() >= n_qubits)
    throw std::invalid_argument("pauli_block: word does not fit the register");

  constexpr double half_pi = std::numbers::pi / 2;
  PauliBlock block;
  for (const auto& [q, axis] : word.axes) {
    block.cascade.push_back(q);
    switch (axis) {
      case PauliAxis::X:
        block.basis.push_back(Gate::h(q));
        break;
      case PauliAxis::Y:
        // RX(-pi/2) maps the rotation axis to -Y, so each Y flips the sign
        // folded into the central angle.
        block.basis.push_back(Gate::rx(q, -half_pi));
        block.angle_sign = -block.angle_sign;
        break;
      case PauliAxis::Z:
        break;
    }
  }
  return block;
}

namespace {

void emit_block(Circuit& c, const PauliBlock& block, const Gate& rotation) {
  for (const auto& g : block.basis) c.append(g);
  for (std::size_t i = 0; i + 1 < block.cascade.size(); ++i)
    c.append(Gate::cnot(block.cascade[i], block.cascade[i + 1]));
  c.append(rotation);
  for (std::size_t i = block.cascade.size() - 1; i-- > 0;)
    c.append(Gate::cnot(block.cascade[i], block.cascade[i + 1]));
  for (auto it = block.basis.rbegin(); it != block.basis.rend(); ++it) {
    Gate g = *it;
    if (g.kind == GateKind::RX) g.angle = -g.angle;
    c.append(g);
  }
}

}  // namespace

Circuit synth_pauli_exponential(const PauliString& word, double theta, int n_qubits) {
  PauliBlock block = pauli_block(word, n_qubits);
  Circuit c{n_qubits, {}};
  emit_block(c, block, Gate::rz(block.cascade.back(), block.angle_sign * theta));
  return c;
}

std::vector<PauliRotation> ucc_rotation_schedule(const ExcitationOperator& op, double theta,
                                                 const JwConvention& conv) {
  op.validate();
  conv.validate();
  std::vector<PauliRotation> schedule;
  // Each generator term i*gamma*P contributes the commuting factor
  // exp(theta*i*gamma*P) = exp(-i*(-2*theta*gamma)/2 * P).
  const PauliSum generator = jw_generator(op, conv);
  for (const auto& term : generator.terms())
    schedule.push_back({term, -2.0 * theta * term.coeff.imag()});
  return schedule;
}

Circuit synth_schedule(const std::vector<PauliRotation>& schedule, int n_qubits) {
  Circuit c{n_qubits, {}};
  for (const auto& rot : schedule)
    c.append(synth_pauli_exponential(rot.word, rot.angle, n_qubits));
  return c;
}

Circuit synth_ucc_factor(const ExcitationOperator& op, double theta, const JwConvention& conv) {
  return synth_schedule(ucc_rotation_schedule(op, theta, conv), conv.total_qubits);
}

}  // namespace uccsynth
