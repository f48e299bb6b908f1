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

#include "uccsynth/circuit.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace uccsynth {

namespace {

void check_qubit(int q, int n, const char* what) {
  if (q < 0 || q >= n) {
    throw std::invalid_argument(std::string("circuit: ") + what + " qubit out of range");
  }
}

void validate_gate(const Gate& g, int n_qubits) {
  check_qubit(g.target, n_qubits, "target");
  if (g.kind == GateKind::CNOT) {
    check_qubit(g.control, n_qubits, "control");
    if (g.control == g.target) throw std::invalid_argument("circuit: cnot control equals target");
  }
  if (g.kind == GateKind::MCRZ) {
    if (g.controls.empty()) throw std::invalid_argument("circuit: mcrz needs controls");
    for (int c : g.controls) {
      check_qubit(c, n_qubits, "control");
      if (c == g.target) throw std::invalid_argument("circuit: mcrz control equals target");
    }
  }
}

bool is_half_pi(double angle) {
  double folded = std::fmod(std::abs(angle), 2.0 * std::numbers::pi);
  return std::abs(folded - std::numbers::pi / 2) < 1e-12 ||
         std::abs(folded - 3 * std::numbers::pi / 2) < 1e-12;
}

std::string format_angle(double a) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", a);
  return buf;
}

}  // namespace

void Circuit::append(Gate g) {
  validate_gate(g, n_qubits);
  gates.push_back(std::move(g));
}

void Circuit::append(const Circuit& other) {
  if (other.n_qubits != n_qubits)
    throw std::invalid_argument("circuit: appending across different register sizes");
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

Circuit compose(const Circuit& a, const Circuit& b) {
  if (a.n_qubits != b.n_qubits)
    throw std::invalid_argument("circuit: composing across different register sizes");
  Circuit out = a;
  out.append(b);
  return out;
}

Circuit adjoint(const Circuit& c) {
  Circuit out;
  out.n_qubits = c.n_qubits;
  out.gates.reserve(c.gates.size());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    Gate g = *it;
    if (g.kind == GateKind::RX || g.kind == GateKind::RZ || g.kind == GateKind::MCRZ)
      g.angle = -g.angle;
    out.gates.push_back(std::move(g));
  }
  return out;
}

GateCounts count_gates(const Circuit& c) {
  GateCounts counts;
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::H:
      case GateKind::X:
        ++counts.single_qubit_clifford;
        break;
      case GateKind::RX:
        if (is_half_pi(g.angle))
          ++counts.single_qubit_clifford;
        else
          ++counts.single_qubit_rotation;
        break;
      case GateKind::RZ:
        ++counts.single_qubit_rotation;
        break;
      case GateKind::CNOT:
        ++counts.cnot;
        break;
      case GateKind::MCRZ:
        ++counts.multi_controlled_rotation;
        break;
    }
  }
  return counts;
}

std::string export_text(const Circuit& c) {
  std::string out = "qubits " + std::to_string(c.n_qubits) + ";\n";
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::H:
        out += "h q[" + std::to_string(g.target) + "];\n";
        break;
      case GateKind::X:
        out += "x q[" + std::to_string(g.target) + "];\n";
        break;
      case GateKind::RX:
        out += "rx(" + format_angle(g.angle) + ") q[" + std::to_string(g.target) + "];\n";
        break;
      case GateKind::RZ:
        out += "rz(" + format_angle(g.angle) + ") q[" + std::to_string(g.target) + "];\n";
        break;
      case GateKind::CNOT:
        out += "cx q[" + std::to_string(g.control) + "],q[" + std::to_string(g.target) + "];\n";
        break;
      case GateKind::MCRZ:
        throw std::domain_error("export_text: circuit still contains an unlowered mcrz");
    }
  }
  return out;
}

namespace {

int parse_qubit_ref(std::istringstream& in) {
  std::string token;
  std::getline(in, token, ']');
  std::size_t open = token.find("q[");
  if (open == std::string::npos)
    throw std::invalid_argument("import_text: expected q[<index>]");
  return std::stoi(token.substr(open + 2));
}

}  // namespace

Circuit import_text(const std::string& text) {
  Circuit c;
  std::istringstream in(text);
  std::string line;
  bool saw_header = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (!saw_header) {
      std::string word;
      ls >> word;
      int n = 0;
      char semi = 0;
      if (word != "qubits" || !(ls >> n) || !(ls >> semi) || semi != ';' || n <= 0)
        throw std::invalid_argument("import_text: missing qubits header");
      c.n_qubits = n;
      saw_header = true;
      continue;
    }
    std::string op;
    std::getline(ls, op, ' ');
    auto bad = [&]() -> double {
      throw std::invalid_argument("import_text: malformed line " + std::to_string(line_no));
    };
    auto parse_paren_angle = [&](const std::string& name) {
      if (op.size() < name.size() + 2 || op.back() != ')') bad();
      return std::stod(op.substr(name.size() + 1, op.size() - name.size() - 2));
    };
    if (op == "h") {
      c.append(Gate::h(parse_qubit_ref(ls)));
    } else if (op == "x") {
      c.append(Gate::x(parse_qubit_ref(ls)));
    } else if (op.rfind("rx(", 0) == 0) {
      double angle = parse_paren_angle("rx");
      c.append(Gate::rx(parse_qubit_ref(ls), angle));
    } else if (op.rfind("rz(", 0) == 0) {
      double angle = parse_paren_angle("rz");
      c.append(Gate::rz(parse_qubit_ref(ls), angle));
    } else if (op == "cx") {
      int control = parse_qubit_ref(ls);
      int target = parse_qubit_ref(ls);
      c.append(Gate::cnot(control, target));
    } else {
      bad();
    }
  }
  if (!saw_header) throw std::invalid_argument("import_text: empty input");
  return c;
}

Eigen::MatrixXcd unitary(const Circuit& c, int oracle_cap) {
  if (c.n_qubits > oracle_cap)
    throw std::invalid_argument("unitary: register exceeds the dense oracle cap");
  const std::int64_t dim = std::int64_t(1) << c.n_qubits;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (const auto& g : c.gates) {
    const std::int64_t tbit = std::int64_t(1) << g.target;
    switch (g.kind) {
      case GateKind::H:
        for (std::int64_t r = 0; r < dim; ++r) {
          if (r & tbit) continue;
          Eigen::RowVectorXcd top = u.row(r);
          u.row(r) = (top + u.row(r | tbit)) * inv_sqrt2;
          u.row(r | tbit) = (top - u.row(r | tbit)) * inv_sqrt2;
        }
        break;
      case GateKind::X:
        for (std::int64_t r = 0; r < dim; ++r)
          if (!(r & tbit)) u.row(r).swap(u.row(r | tbit));
        break;
      case GateKind::RX: {
        cdouble cos_part(std::cos(g.angle / 2), 0.0);
        cdouble sin_part(0.0, -std::sin(g.angle / 2));
        for (std::int64_t r = 0; r < dim; ++r) {
          if (r & tbit) continue;
          Eigen::RowVectorXcd top = u.row(r);
          u.row(r) = cos_part * top + sin_part * u.row(r | tbit);
          u.row(r | tbit) = sin_part * top + cos_part * u.row(r | tbit);
        }
        break;
      }
      case GateKind::RZ: {
        cdouble lo = std::exp(cdouble(0.0, -g.angle / 2));
        cdouble hi = std::exp(cdouble(0.0, g.angle / 2));
        for (std::int64_t r = 0; r < dim; ++r) u.row(r) *= (r & tbit) ? hi : lo;
        break;
      }
      case GateKind::CNOT: {
        const std::int64_t cbit = std::int64_t(1) << g.control;
        for (std::int64_t r = 0; r < dim; ++r)
          if ((r & cbit) && !(r & tbit)) u.row(r).swap(u.row(r | tbit));
        break;
      }
      case GateKind::MCRZ: {
        std::int64_t cmask = 0;
        for (int q : g.controls) cmask |= std::int64_t(1) << q;
        cdouble lo = std::exp(cdouble(0.0, -g.angle / 2));
        cdouble hi = std::exp(cdouble(0.0, g.angle / 2));
        for (std::int64_t r = 0; r < dim; ++r)
          if ((r & cmask) == cmask) u.row(r) *= (r & tbit) ? hi : lo;
        break;
      }
    }
  }
  return u;
}

}  // namespace uccsynth
