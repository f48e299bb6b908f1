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

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace uccsynth {

using cdouble = std::complex<double>;

/// Number of qubits beyond which dense-matrix oracles refuse to run.
/// Callers that need a different bound (e.g. the CLI honouring an
/// environment override) pass an explicit cap to the oracle entry points.
inline constexpr int kDefaultOracleQubitCap = 16;

enum class PauliAxis : std::uint8_t { X = 1, Y = 2, Z = 3 };

char axis_letter(PauliAxis a);

/// A Pauli word c * P_{q1} P_{q2} ... with a complex coefficient.
///
/// The map holds only non-identity axes, keyed by qubit index, so two
/// strings are equal as operators on any register that contains their
/// support iff coefficient and map agree.
struct PauliString {
  cdouble coeff{1.0, 0.0};
  std::map<int, PauliAxis> axes;

  bool is_identity() const { return axes.empty(); }
  int max_qubit() const { return axes.empty() ? -1 : axes.rbegin()->first; }

  bool same_axes(const PauliString& other) const { return axes == other.axes; }
};

/// Product a*b including the accumulated i/-i phases from single-qubit
/// Pauli multiplication.
PauliString multiply(const PauliString& a, const PauliString& b);

/// Number of qubits on which the two words carry different non-identity
/// axes. Two words commute iff this count is even.
int anticommuting_index_count(const PauliString& a, const PauliString& b);

bool commutes(const PauliString& a, const PauliString& b);

/// Dense 2^n x 2^n matrix of the word on an n-qubit register. Qubit 0 is
/// the least significant bit of the basis-state index. Throws if n is too
/// small for the word's support or exceeds the oracle cap.
Eigen::MatrixXcd to_matrix(const PauliString& p, int n_qubits,
                           int oracle_cap = kDefaultOracleQubitCap);

/// One-line form "(re,im) * X0 Y3 Z5"; identity renders as "(re,im) * I".
std::string to_string(const PauliString& p);
PauliString parse_pauli_string(const std::string& text);

/// Sum of Pauli words kept in a canonical form: terms sorted by axes,
/// equal-axes terms merged, negligible coefficients dropped.
class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(std::vector<PauliString> terms);

  static PauliSum identity();

  const std::vector<PauliString>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  int max_qubit() const;

  PauliSum operator+(const PauliSum& other) const;
  PauliSum operator-(const PauliSum& other) const;
  PauliSum operator*(const PauliSum& other) const;
  PauliSum scaled(cdouble factor) const;

  /// Adjoint. Pauli words are Hermitian, so this conjugates coefficients.
  PauliSum adjoint() const;

  Eigen::MatrixXcd to_matrix(int n_qubits,
                             int oracle_cap = kDefaultOracleQubitCap) const;

  std::string to_string() const;

 private:
  void canonicalize();
  std::vector<PauliString> terms_;
};

}  // namespace uccsynth
