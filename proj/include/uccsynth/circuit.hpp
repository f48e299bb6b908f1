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
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "uccsynth/pauli.hpp"

namespace uccsynth {

enum class GateKind : std::uint8_t { H, X, RX, RZ, CNOT, MCRZ };

/// One gate. `target` is always used; `control` only for CNOT; `controls`
/// only for MCRZ; `angle` only for the rotation kinds. RZ(t) is
/// diag(e^{-it/2}, e^{+it/2}) and RX(t) = exp(-i t X / 2).
struct Gate {
  GateKind kind;
  int target = 0;
  int control = -1;
  std::vector<int> controls;
  double angle = 0.0;

  static Gate h(int q) { return {GateKind::H, q}; }
  static Gate x(int q) { return {GateKind::X, q}; }
  static Gate rx(int q, double angle) { return {GateKind::RX, q, -1, {}, angle}; }
  static Gate rz(int q, double angle) { return {GateKind::RZ, q, -1, {}, angle}; }
  static Gate cnot(int control, int target) { return {GateKind::CNOT, target, control}; }
  static Gate mcrz(std::vector<int> controls, int target, double angle) {
    return {GateKind::MCRZ, target, -1, std::move(controls), angle};
  }
};

struct GateCounts {
  long long cnot = 0;
  long long single_qubit_rotation = 0;
  long long single_qubit_clifford = 0;
  long long multi_controlled_rotation = 0;

  long long total() const {
    return cnot + single_qubit_rotation + single_qubit_clifford + multi_controlled_rotation;
  }
  bool operator==(const GateCounts&) const = default;
};

struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;

  void append(Gate g);
  void append(const Circuit& other);  // same register required
};

/// b after a, on an equal-sized register.
Circuit compose(const Circuit& a, const Circuit& b);

/// Exact inverse: gates reversed, each rotation angle negated.
Circuit adjoint(const Circuit& c);

/// Classifies rotations with angle +-pi/2 (mod 2pi) on the X axis as
/// Clifford, matching the usual basis-change bookkeeping; every RZ counts
/// as a rotation.
GateCounts count_gates(const Circuit& c);

/// Plain-text gate listing, one gate per line after a "qubits N;" header.
/// Re-importing the text reproduces the circuit byte for byte. MCRZ has no
/// representation here; lower it first.
std::string export_text(const Circuit& c);
Circuit import_text(const std::string& text);

/// Dense unitary, accumulated gate by gate with qubit 0 as the least
/// significant index bit.
Eigen::MatrixXcd unitary(const Circuit& c, int oracle_cap = kDefaultOracleQubitCap);

}  // namespace uccsynth
