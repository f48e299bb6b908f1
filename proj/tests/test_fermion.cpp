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

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "test_helpers.hpp"
#include "uccsynth/fermion.hpp"

using namespace uccsynth;
using testutil::matrix_deviation;
using testutil::random_excitation;

namespace {

// Axis letters of a word at qubits 0..n-1, e.g. "XXYX". Only meaningful for
// words supported on exactly those qubits.
std::string axis_label(const PauliString& w, int n) {
  std::string label;
  for (int q = 0; q < n; ++q) {
    auto it = w.axes.find(q);
    label += (it == w.axes.end()) ? 'I' : axis_letter(it->second);
  }
  return label;
}

}  // namespace

TEST_CASE("ladder operators satisfy the canonical anticommutation relations") {
  const int m = 5;
  JwConvention conv = JwConvention::identity(m);
  Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(1 << m, 1 << m);
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      PauliSum ap = jw_ladder(p, false, conv);
      PauliSum aq = jw_ladder(q, false, conv);
      PauliSum aq_dag = jw_ladder(q, true, conv);

      Eigen::MatrixXcd mixed = (ap * aq_dag + aq_dag * ap).to_matrix(m);
      Eigen::MatrixXcd expected = (p == q) ? eye : Eigen::MatrixXcd::Zero(1 << m, 1 << m);
      CHECK(matrix_deviation(mixed, expected) < 1e-12);

      Eigen::MatrixXcd same = (ap * aq + aq * ap).to_matrix(m);
      CHECK(matrix_deviation(same, Eigen::MatrixXcd::Zero(1 << m, 1 << m)) < 1e-12);
    }
  }
}

TEST_CASE("number operator reads the mapped qubit under a permuted convention") {
  JwConvention conv;
  conv.total_qubits = 4;
  conv.orbital_to_qubit = {2, 0, 3, 1};
  conv.validate();

  for (int p = 0; p < 4; ++p) {
    PauliSum number = jw_ladder(p, true, conv) * jw_ladder(p, false, conv);
    Eigen::MatrixXcd n_mat = number.to_matrix(4);
    for (int basis = 0; basis < 16; ++basis) {
      double expected = (basis >> conv.qubit_of(p)) & 1 ? 1.0 : 0.0;
      CHECK(std::abs(n_mat(basis, basis) - expected) < 1e-12);
    }
  }

  // The anticommutation relations survive the interleaving.
  PauliSum a0 = jw_ladder(0, false, conv);
  PauliSum a2_dag = jw_ladder(2, true, conv);
  Eigen::MatrixXcd mixed = (a0 * a2_dag + a2_dag * a0).to_matrix(4);
  CHECK(matrix_deviation(mixed, Eigen::MatrixXcd::Zero(16, 16)) < 1e-12);
}

TEST_CASE("rank-1 generator is the signed two-word cross pattern") {
  ExcitationOperator op{{0}, {1}};
  PauliSum g = jw_generator(op, JwConvention::identity(2));
  REQUIRE(g.size() == 2);
  // Canonical order sorts X0 Y1 before Y0 X1.
  CHECK(axis_label(g.terms()[0], 2) == "XY");
  CHECK(g.terms()[0].coeff == cdouble(0.0, -0.5));
  CHECK(axis_label(g.terms()[1], 2) == "YX");
  CHECK(g.terms()[1].coeff == cdouble(0.0, 0.5));
}

TEST_CASE("doubles generator reproduces the signed eight-word pattern") {
  // occ (0,1), virt listed (3,2): the layout whose expansion carries
  // coefficient +i/8 on XXYX, YXYY, XYYY, XXXY and -i/8 on the rest.
  ExcitationOperator op{{0, 1}, {3, 2}};
  PauliSum g = jw_generator(op, JwConvention::identity(4));
  REQUIRE(g.size() == 8);

  const std::set<std::string> plus = {"XXYX", "YXYY", "XYYY", "XXXY"};
  const std::set<std::string> minus = {"YXXX", "XYXX", "YYYX", "YYXY"};
  for (const PauliString& term : g.terms()) {
    std::string label = axis_label(term, 4);
    if (plus.count(label)) {
      CHECK(term.coeff == cdouble(0.0, 0.125));
    } else {
      REQUIRE(minus.count(label));
      CHECK(term.coeff == cdouble(0.0, -0.125));
    }
  }
}

TEST_CASE("generator terms have the rank-determined shape") {
  auto rng = std::mt19937_64(5);
  for (int rank = 1; rank <= 3; ++rank) {
    for (int trial = 0; trial < 6; ++trial) {
      int m = 2 * rank + int(rng() % 3);
      ExcitationOperator op = random_excitation(rank, m, rng);
      PauliSum g = jw_generator(op, JwConvention::identity(m));

      CHECK(int(g.size()) == 1 << (2 * rank - 1));
      std::set<int> orbital_qubits(op.occupied.begin(), op.occupied.end());
      orbital_qubits.insert(op.virtuals.begin(), op.virtuals.end());
      int top = *orbital_qubits.rbegin();
      int bottom = *orbital_qubits.begin();

      double magnitude = std::ldexp(1.0, 1 - 2 * rank);
      for (const PauliString& term : g.terms()) {
        CHECK(term.coeff.real() == 0.0);
        CHECK(std::abs(term.coeff.imag()) == magnitude);
        int n_x = 0, n_y = 0;
        for (const auto& [q, axis] : term.axes) {
          if (axis == PauliAxis::X) {
            ++n_x;
            CHECK(orbital_qubits.count(q) == 1);
          } else if (axis == PauliAxis::Y) {
            ++n_y;
            CHECK(orbital_qubits.count(q) == 1);
          } else {
            // Z fills only interior gaps, never outside the orbital span.
            CHECK(orbital_qubits.count(q) == 0);
            CHECK(q > bottom);
            CHECK(q < top);
          }
        }
        CHECK(n_x % 2 == 1);
        CHECK(n_y % 2 == 1);
        CHECK(n_x + n_y == 2 * rank);
      }
    }
  }
}

TEST_CASE("generator equals the explicit ladder product minus its adjoint") {
  ExcitationOperator op{{0, 2}, {3, 1}};
  JwConvention conv = JwConvention::identity(4);

  // A = a^dag_{v1} a^dag_{v2} a_{o2} a_{o1}.
  PauliSum a = jw_ladder(op.virtuals[0], true, conv) * jw_ladder(op.virtuals[1], true, conv) *
               jw_ladder(op.occupied[1], false, conv) * jw_ladder(op.occupied[0], false, conv);
  PauliSum expected = a - a.adjoint();

  Eigen::MatrixXcd g = jw_generator(op, conv).to_matrix(4);
  CHECK(matrix_deviation(g, expected.to_matrix(4)) < 1e-14);
  // Anti-Hermitian by construction.
  CHECK(matrix_deviation(g, -g.adjoint().eval()) < 1e-14);
}

TEST_CASE("all doubles words commute pairwise with the tabulated overlaps") {
  ExcitationOperator op{{0, 1}, {3, 2}};
  PauliSum g = jw_generator(op, JwConvention::identity(4));
  CommutationReport report = pairwise_commutation_report(g);
  REQUIRE(report.terms.size() == 8);
  REQUIRE(report.counts.rows() == 8);
  REQUIRE(report.counts.cols() == 8);

  // Partner pairs differ on all four qubits; every other distinct pair
  // differs on exactly two.
  const std::map<std::string, std::string> partner = {
      {"XXYX", "YYXY"}, {"YYXY", "XXYX"}, {"YXYY", "XYXX"}, {"XYXX", "YXYY"},
      {"XYYY", "YXXX"}, {"YXXX", "XYYY"}, {"XXXY", "YYYX"}, {"YYYX", "XXXY"}};

  for (int i = 0; i < 8; ++i) {
    std::string row = axis_label(report.terms[i], 4);
    for (int j = 0; j < 8; ++j) {
      std::string col = axis_label(report.terms[j], 4);
      int expected = 0;
      if (i != j) expected = (partner.at(row) == col) ? 4 : 2;
      CHECK(report.counts(i, j) == expected);
      CHECK(report.counts(i, j) % 2 == 0);
    }
  }
}

TEST_CASE("excitation text form round-trips and validates") {
  ExcitationOperator op{{0, 2}, {5, 3}};
  CHECK(to_string(op) == "A[0,2->5,3]");
  ExcitationOperator back = parse_excitation("A[0,2->5,3]");
  CHECK(back.occupied == op.occupied);
  CHECK(back.virtuals == op.virtuals);

  auto rng = std::mt19937_64(99);
  for (int i = 0; i < 10; ++i) {
    ExcitationOperator sample = random_excitation(1 + int(rng() % 4), 12, rng);
    ExcitationOperator parsed = parse_excitation(to_string(sample));
    CHECK(parsed.occupied == sample.occupied);
    CHECK(parsed.virtuals == sample.virtuals);
  }
}

TEST_CASE("malformed and invalid excitations raise distinct messages") {
  // Syntax failure: tagged "excitation parse:".
  try {
    parse_excitation("B[0->1]");
    FAIL("expected a parse failure");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).rfind("excitation parse:", 0) == 0);
  }
  CHECK_THROWS_AS(parse_excitation("A[0,x->1]"), std::invalid_argument);

  // Well-formed text, invalid operator: tagged "excitation:".
  try {
    parse_excitation("A[0,1->1,2]");
    FAIL("expected a validation failure");
  } catch (const std::invalid_argument& e) {
    std::string what = e.what();
    CHECK(what.rfind("excitation:", 0) == 0);
    CHECK(what.rfind("excitation parse:", 0) != 0);
  }
  CHECK_THROWS_AS(parse_excitation("A[0->]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_excitation("A[0,1,2,3,4,5,6->7,8,9,10,11,12,13]"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_excitation("A[-1->2]"), std::invalid_argument);
}

TEST_CASE("convention validation rejects broken maps") {
  JwConvention conv;
  conv.total_qubits = 3;
  conv.orbital_to_qubit = {0, 0, 1};
  CHECK_THROWS_AS(conv.validate(), std::invalid_argument);
  conv.orbital_to_qubit = {0, 1, 3};
  CHECK_THROWS_AS(conv.validate(), std::invalid_argument);
  CHECK_THROWS_AS(JwConvention::identity(3).qubit_of(5), std::out_of_range);
}
