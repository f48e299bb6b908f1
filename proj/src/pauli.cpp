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

#include "uccsynth/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace uccsynth {

namespace {

constexpr double kDropTolerance = 1e-14;

// Single-qubit product table. For distinct non-identity a, b the result is
// the third axis with phase +i when (a,b) is a cyclic pair (XY, YZ, ZX) and
// -i otherwise. Equal axes square to identity.
void multiply_axis(PauliAxis a, PauliAxis b, bool& identity_out,
                   PauliAxis& axis_out, cdouble& phase_out) {
  if (a == b) {
    identity_out = true;
    phase_out = 1.0;
    return;
  }
  identity_out = false;
  int ia = static_cast<int>(a), ib = static_cast<int>(b);
  // The third axis index is 6 - ia - ib.
  axis_out = static_cast<PauliAxis>(6 - ia - ib);
  bool cyclic = (ib - ia + 3) % 3 == 1;  // X->Y, Y->Z, Z->X
  phase_out = cyclic ? cdouble(0.0, 1.0) : cdouble(0.0, -1.0);
}

std::string format_complex(cdouble c) {
  char buf[80];
  std::snprintf(buf, sizeof(buf), "(%.17g,%.17g)", c.real(), c.imag());
  return buf;
}

}  // namespace

char axis_letter(PauliAxis a) {
  switch (a) {
    case PauliAxis::X:
      return 'X';
    case PauliAxis::Y:
      return 'Y';
    case PauliAxis::Z:
      return 'Z';
  }
  return '?';
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  PauliString out;
  out.coeff = a.coeff * b.coeff;
  auto ia = a.axes.begin();
  auto ib = b.axes.begin();
  while (ia != a.axes.end() || ib != b.axes.end()) {
    if (ib == b.axes.end() || (ia != a.axes.end() && ia->first < ib->first)) {
      out.axes.emplace_hint(out.axes.end(), *ia);
      ++ia;
    } else if (ia == a.axes.end() || ib->first < ia->first) {
      out.axes.emplace_hint(out.axes.end(), *ib);
      ++ib;
    } else {
      bool identity;
      PauliAxis axis;
      cdouble phase;
      multiply_axis(ia->second, ib->second, identity, axis, phase);
      out.coeff *= phase;
      if (!identity) out.axes.emplace_hint(out.axes.end(), ia->first, axis);
      ++ia;
      ++ib;
    }
  }
  return out;
}

int anticommuting_index_count(const PauliString& a, const PauliString& b) {
  int count = 0;
  auto ia = a.axes.begin();
  auto ib = b.axes.begin();
  while (ia != a.axes.end() && ib != b.axes.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      if (ia->second != ib->second) ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

bool commutes(const PauliString& a, const PauliString& b) {
  return anticommuting_index_count(a, b) % 2 == 0;
}

Eigen::MatrixXcd to_matrix(const PauliString& p, int n_qubits, int oracle_cap) {
  if (n_qubits <= 0) throw std::invalid_argument("to_matrix: register must have at least one qubit");
  if (p.max_qubit() >= n_qubits)
    throw std::invalid_argument("to_matrix: register smaller than the word's support");
  if (n_qubits > oracle_cap)
    throw std::invalid_argument("to_matrix: register exceeds the dense oracle cap");

  std::uint64_t flip_mask = 0;   // X and Y flip the bit
  std::uint64_t phase_mask = 0;  // Y and Z pick up (-1)^bit
  int n_y = 0;
  for (const auto& [q, axis] : p.axes) {
    if (axis != PauliAxis::Z) flip_mask |= std::uint64_t(1) << q;
    if (axis != PauliAxis::X) phase_mask |= std::uint64_t(1) << q;
    if (axis == PauliAxis::Y) ++n_y;
  }
  cdouble y_phase = 1.0;
  for (int i = 0; i < n_y % 4; ++i) y_phase *= cdouble(0.0, 1.0);

  const std::uint64_t dim = std::uint64_t(1) << n_qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::uint64_t col = 0; col < dim; ++col) {
    double sign = (std::popcount(col & phase_mask) % 2 == 0) ? 1.0 : -1.0;
    m(col ^ flip_mask, col) = p.coeff * y_phase * sign;
  }
  return m;
}

std::string to_string(const PauliString& p) {
  std::string out = format_complex(p.coeff) + " *";
  if (p.axes.empty()) return out + " I";
  for (const auto& [q, axis] : p.axes) {
    out += ' ';
    out += axis_letter(axis);
    out += std::to_string(q);
  }
  return out;
}

PauliString parse_pauli_string(const std::string& text) {
  PauliString out;
  std::istringstream in(text);
  double re, im;
  char ch;
  in >> ch;
  if (!in || ch != '(') throw std::invalid_argument("pauli parse: expected '('");
  in >> re >> ch >> im;
  if (!in || ch != ',') throw std::invalid_argument("pauli parse: bad coefficient");
  in >> ch;
  if (!in || ch != ')') throw std::invalid_argument("pauli parse: expected ')'");
  in >> ch;
  if (!in || ch != '*') throw std::invalid_argument("pauli parse: expected '*'");
  out.coeff = cdouble(re, im);
  std::string token;
  while (in >> token) {
    if (token == "I") {
      if (!out.axes.empty()) throw std::invalid_argument("pauli parse: I mixed with axes");
      continue;
    }
    PauliAxis axis;
    switch (token[0]) {
      case 'X': axis = PauliAxis::X; break;
      case 'Y': axis = PauliAxis::Y; break;
      case 'Z': axis = PauliAxis::Z; break;
      default: throw std::invalid_argument("pauli parse: unknown axis in '" + token + "'");
    }
    int qubit = 0;
    try {
      qubit = std::stoi(token.substr(1));
    } catch (const std::exception&) {
      throw std::invalid_argument("pauli parse: bad qubit in '" + token + "'");
    }
    if (qubit < 0 || out.axes.count(qubit))
      throw std::invalid_argument("pauli parse: repeated or negative qubit");
    out.axes.emplace(qubit, axis);
  }
  return out;
}

PauliSum::PauliSum(std::vector<PauliString> terms) : terms_(std::move(terms)) {
  canonicalize();
}

PauliSum PauliSum::identity() { return PauliSum({PauliString{}}); }

int PauliSum::max_qubit() const {
  int m = -1;
  for (const auto& t : terms_) m = std::max(m, t.max_qubit());
  return m;
}

void PauliSum::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const PauliString& a, const PauliString& b) { return a.axes < b.axes; });
  std::vector<PauliString> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().same_axes(t)) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  terms_.clear();
  for (auto& t : merged) {
    if (std::abs(t.coeff) > kDropTolerance) terms_.push_back(std::move(t));
  }
}

PauliSum PauliSum::operator+(const PauliSum& other) const {
  std::vector<PauliString> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return PauliSum(std::move(all));
}

PauliSum PauliSum::operator-(const PauliSum& other) const {
  return *this + other.scaled(-1.0);
}

PauliSum PauliSum::operator*(const PauliSum& other) const {
  std::vector<PauliString> prods;
  prods.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) prods.push_back(multiply(a, b));
  return PauliSum(std::move(prods));
}

PauliSum PauliSum::scaled(cdouble factor) const {
  std::vector<PauliString> scaled_terms = terms_;
  for (auto& t : scaled_terms) t.coeff *= factor;
  return PauliSum(std::move(scaled_terms));
}

PauliSum PauliSum::adjoint() const {
  std::vector<PauliString> conj_terms = terms_;
  for (auto& t : conj_terms) t.coeff = std::conj(t.coeff);
  return PauliSum(std::move(conj_terms));
}

Eigen::MatrixXcd PauliSum::to_matrix(int n_qubits, int oracle_cap) const {
  const std::uint64_t dim = std::uint64_t(1) << n_qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : terms_) m += uccsynth::to_matrix(t, n_qubits, oracle_cap);
  return m;
}

std::string PauliSum::to_string() const {
  if (terms_.empty()) return "(0,0) * I";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += " + ";
    out += uccsynth::to_string(terms_[i]);
  }
  return out;
}

}  // namespace uccsynth
