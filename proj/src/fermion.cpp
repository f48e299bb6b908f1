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

#include "uccsynth/fermion.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace uccsynth {

JwConvention JwConvention::identity(int n_qubits) {
  JwConvention conv;
  conv.total_qubits = n_qubits;
  conv.orbital_to_qubit.resize(n_qubits);
  for (int i = 0; i < n_qubits; ++i) conv.orbital_to_qubit[i] = i;
  return conv;
}

int JwConvention::qubit_of(int orbital) const {
  if (orbital < 0 || orbital >= num_orbitals())
    throw std::out_of_range("JwConvention: orbital index out of range");
  return orbital_to_qubit[orbital];
}

void JwConvention::validate() const {
  if (total_qubits <= 0) throw std::invalid_argument("JwConvention: empty register");
  std::set<int> seen;
  for (int q : orbital_to_qubit) {
    if (q < 0 || q >= total_qubits)
      throw std::invalid_argument("JwConvention: orbital mapped outside the register");
    if (!seen.insert(q).second)
      throw std::invalid_argument("JwConvention: two orbitals share a qubit");
  }
}

void ExcitationOperator::validate() const {
  if (occupied.size() != virtuals.size())
    throw std::invalid_argument("excitation: occupied/virtual lists differ in length");
  if (occupied.empty() || occupied.size() > 6)
    throw std::invalid_argument("excitation: rank must be between 1 and 6");
  std::set<int> seen;
  for (int p : occupied) {
    if (p < 0) throw std::invalid_argument("excitation: negative orbital");
    if (!seen.insert(p).second) throw std::invalid_argument("excitation: repeated orbital");
  }
  for (int p : virtuals) {
    if (p < 0) throw std::invalid_argument("excitation: negative orbital");
    if (!seen.insert(p).second)
      throw std::invalid_argument("excitation: occupied and virtual lists overlap");
  }
}

std::string to_string(const ExcitationOperator& op) {
  std::ostringstream out;
  out << "A[";
  for (std::size_t i = 0; i < op.occupied.size(); ++i) {
    if (i) out << ',';
    out << op.occupied[i];
  }
  out << "->";
  for (std::size_t i = 0; i < op.virtuals.size(); ++i) {
    if (i) out << ',';
    out << op.virtuals[i];
  }
  out << ']';
  return out.str();
}

ExcitationOperator parse_excitation(const std::string& text) {
  auto fail = [&]() -> ExcitationOperator {
    throw std::invalid_argument("excitation parse: expected A[i1,...->a1,...], got '" + text + "'");
  };
  std::size_t open = text.find('[');
  std::size_t close = text.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open) return fail();
  std::string head = text.substr(0, open);
  head.erase(std::remove_if(head.begin(), head.end(), ::isspace), head.end());
  if (head != "A") return fail();
  std::string body = text.substr(open + 1, close - open - 1);
  std::size_t arrow = body.find("->");
  if (arrow == std::string::npos) return fail();

  auto parse_list = [&](const std::string& part) {
    std::vector<int> out;
    std::istringstream in(part);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        out.push_back(std::stoi(item));
      } catch (const std::exception&) {
        fail();
      }
    }
    return out;
  };

  ExcitationOperator op;
  op.occupied = parse_list(body.substr(0, arrow));
  op.virtuals = parse_list(body.substr(arrow + 2));
  op.validate();
  return op;
}

PauliSum jw_ladder(int orbital, bool dagger, const JwConvention& conv) {
  int q = conv.qubit_of(orbital);
  // sigma = (X + iY)/2 annihilates, sigma^dag = (X - iY)/2 creates.
  PauliString x_part, y_part;
  x_part.coeff = 0.5;
  x_part.axes[q] = PauliAxis::X;
  y_part.coeff = dagger ? cdouble(0.0, -0.5) : cdouble(0.0, 0.5);
  y_part.axes[q] = PauliAxis::Y;
  for (int other = q + 1; other < conv.total_qubits; ++other) {
    x_part.axes[other] = PauliAxis::Z;
    y_part.axes[other] = PauliAxis::Z;
  }
  return PauliSum({x_part, y_part});
}

PauliSum jw_generator(const ExcitationOperator& op, const JwConvention& conv) {
  op.validate();
  conv.validate();
  // Build A by left-multiplying ladders in application order: annihilate
  // o1, o2, ..., then create vn, ..., v1.
  PauliSum a = PauliSum::identity();
  for (int p : op.occupied) a = jw_ladder(p, false, conv) * a;
  for (auto it = op.virtuals.rbegin(); it != op.virtuals.rend(); ++it)
    a = jw_ladder(*it, true, conv) * a;
  return a - a.adjoint();
}

CommutationReport pairwise_commutation_report(const PauliSum& sum) {
  CommutationReport report;
  report.terms = sum.terms();
  const int n = static_cast<int>(report.terms.size());
  report.counts.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      report.counts(i, j) = anticommuting_index_count(report.terms[i], report.terms[j]);
  return report;
}

}  // namespace uccsynth
