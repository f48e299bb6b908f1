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

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "test_helpers.hpp"
#include "uccsynth/statevector.hpp"

using namespace uccsynth;
using testutil::random_excitation;

namespace {

Circuit random_circuit(int n_qubits, int n_gates, std::mt19937_64& rng) {
  Circuit c;
  c.n_qubits = n_qubits;
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int i = 0; i < n_gates; ++i) {
    int q = int(rng() % n_qubits);
    switch (rng() % 6) {
      case 0: c.append(Gate::h(q)); break;
      case 1: c.append(Gate::x(q)); break;
      case 2: c.append(Gate::rx(q, angle(rng))); break;
      case 3: c.append(Gate::rz(q, angle(rng))); break;
      case 4: {
        int t = int(rng() % n_qubits);
        if (t == q) t = (t + 1) % n_qubits;
        c.append(Gate::cnot(q, t));
        break;
      }
      default: {
        int t = (q + 1) % n_qubits;
        int c2 = (q + 2) % n_qubits;
        c.append(Gate::mcrz({q, c2 == t ? (c2 + 1) % n_qubits : c2}, t, angle(rng)));
        break;
      }
    }
  }
  return c;
}

StateVector apply_matrix(const Eigen::MatrixXcd& u, const StateVector& in) {
  StateVector out = in;
  Eigen::Map<const Eigen::VectorXcd> v(in.amps.data(), Eigen::Index(in.dim()));
  Eigen::VectorXcd w = u * v;
  for (std::uint64_t i = 0; i < out.dim(); ++i) out.amps[i] = w(Eigen::Index(i));
  return out;
}

}  // namespace

TEST_CASE("statevector gate application matches the dense unitary") {
  auto rng = std::mt19937_64(3);
  for (int trial = 0; trial < 4; ++trial) {
    Circuit c = random_circuit(5, 25, rng);
    auto state_rng = case_rng(100, std::uint64_t(trial));
    StateVector in = random_state(5, state_rng);
    StateVector fast = in;
    apply_circuit(fast, c);
    StateVector dense = apply_matrix(unitary(c), in);
    CHECK(deviation(fast, dense) < 1e-12);
  }
}

TEST_CASE("registers beyond the simulation cap are refused") {
  CHECK_THROWS_AS(StateVector(kMaxSimQubits + 1), std::invalid_argument);
  CHECK_THROWS_AS(StateVector::basis_state(2, 4), std::invalid_argument);
  CHECK_NOTHROW(StateVector(1));
}

TEST_CASE("exact factor action: theta = 0 is a bit-exact identity") {
  ExcitationOperator op{{0, 1}, {2, 3}};
  JwConvention conv = JwConvention::identity(4);
  auto rng = case_rng(4, 1);
  StateVector psi = random_state(4, rng);
  StateVector out = psi;
  apply_ucc_factor_exact(out, op, 0.0, conv);
  for (std::uint64_t i = 0; i < psi.dim(); ++i) CHECK(out.amps[i] == psi.amps[i]);
}

TEST_CASE("exact factor action: full transfer at theta = pi/2") {
  ExcitationOperator op{{0}, {1}};
  JwConvention conv = JwConvention::identity(2);
  StateVector psi = StateVector::basis_state(2, 0b01);
  apply_ucc_factor_exact(psi, op, std::acos(-1.0) / 2, conv);
  CHECK(std::abs(psi.amps[0b10] - cdouble(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(psi.amps[0b01]) < 1e-15);
}

TEST_CASE("exact factor action: spectator below the chain flips the sign") {
  // a^dag_2 a_0 acting across an occupied orbital 1 picks up one Z sign.
  ExcitationOperator op{{0}, {2}};
  JwConvention conv = JwConvention::identity(3);
  const double theta = 0.5;
  StateVector psi = StateVector::basis_state(3, 0b011);
  apply_ucc_factor_exact(psi, op, theta, conv);
  CHECK(std::abs(psi.amps[0b011] - std::cos(theta)) < 1e-15);
  CHECK(std::abs(psi.amps[0b110] - (-std::sin(theta))) < 1e-15);

  // Without the spectator the sign is positive.
  StateVector bare = StateVector::basis_state(3, 0b001);
  apply_ucc_factor_exact(bare, op, theta, conv);
  CHECK(std::abs(bare.amps[0b100] - std::sin(theta)) < 1e-15);
}

TEST_CASE("the three independent references agree with each other") {
  auto rng = std::mt19937_64(19);
  for (int trial = 0; trial < 4; ++trial) {
    const int m = 6;
    ExcitationOperator op = random_excitation(2, m, rng);
    JwConvention conv = JwConvention::identity(m);
    double theta = std::uniform_real_distribution<double>(-3.0, 3.0)(rng);

    auto state_rng = case_rng(55, std::uint64_t(trial));
    StateVector input = random_state(m, state_rng);

    StateVector pair_rotation = input;
    apply_ucc_factor_exact(pair_rotation, op, theta, conv);

    StateVector taylor = input;
    apply_generator_exponential(taylor, op, theta, conv);

    StateVector dense = apply_matrix(matrix_exponential_oracle(op, theta, conv), input);

    CHECK(deviation(pair_rotation, taylor) < 1e-12);
    CHECK(deviation(pair_rotation, dense) < 1e-12);
    CHECK(deviation(taylor, dense) < 1e-12);
  }
}

TEST_CASE("determinants outside the excitation block pass through bit-exactly") {
  ExcitationOperator op{{0, 1}, {2, 3}};
  JwConvention conv = JwConvention::identity(6);
  auto rng = case_rng(8, 0);
  StateVector psi = random_state(6, rng);
  StateVector out = psi;
  apply_ucc_factor_exact(out, op, 1.1, conv);

  const std::uint64_t occ_mask = 0b0011, virt_mask = 0b1100;
  for (std::uint64_t d = 0; d < psi.dim(); ++d) {
    bool excitable = (d & occ_mask) == occ_mask && (d & virt_mask) == 0;
    bool image = (d & virt_mask) == virt_mask && (d & occ_mask) == 0;
    if (!excitable && !image) CHECK(out.amps[d] == psi.amps[d]);
  }
}

TEST_CASE("taylor oracle handles registers beyond the dense-matrix cap") {
  const int m = 12;
  auto rng = std::mt19937_64(91);
  ExcitationOperator op = random_excitation(3, m, rng);
  JwConvention conv = JwConvention::identity(m);
  auto state_rng = case_rng(6, 2);
  StateVector input = random_state(m, state_rng);

  StateVector taylor = input;
  apply_generator_exponential(taylor, op, 2.4, conv);
  StateVector exact = input;
  apply_ucc_factor_exact(exact, op, 2.4, conv);
  CHECK(deviation(taylor, exact) < 1e-12);
  CHECK(std::abs(taylor.norm() - 1.0) < 1e-12);
}

TEST_CASE("sector restriction reports leakage and renormalizes the slice") {
  StateVector psi(3);
  psi.amps[0b000] = 0.6;
  psi.amps[0b010] = cdouble(0.0, 0.48);
  psi.amps[0b100] = 0.64;

  SectorRestriction r = sector_restrict(psi, {2});
  CHECK(r.reduced.n_qubits == 2);
  CHECK(std::abs(r.leaked_weight - 0.4096) < 1e-12);
  double kept = std::sqrt(1.0 - 0.4096);
  CHECK(std::abs(r.reduced.amps[0b00] - 0.6 / kept) < 1e-12);
  CHECK(std::abs(r.reduced.amps[0b10] - cdouble(0.0, 0.48 / kept)) < 1e-12);
  CHECK(std::abs(r.reduced.norm() - 1.0) < 1e-12);

  // Restricting a low qubit compacts the survivors downward.
  SectorRestriction low = sector_restrict(psi, {0});
  CHECK(low.reduced.n_qubits == 2);
  CHECK(std::abs(low.leaked_weight) < 1e-15);
  CHECK(std::abs(low.reduced.amps[0b01] - cdouble(0.0, 0.48)) < 1e-12);  // old qubit 1 -> 0
  CHECK(std::abs(low.reduced.amps[0b10] - cdouble(0.64, 0.0)) < 1e-12);  // old qubit 2 -> 1

  CHECK_THROWS_AS(sector_restrict(psi, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(sector_restrict(psi, {3}), std::invalid_argument);
}

TEST_CASE("state dumps are deterministic and parse back") {
  StateVector basis = StateVector::basis_state(3, 0b001);
  CHECK(dump_state(basis) == "100 1 0\n");

  auto rng = case_rng(12, 7);
  StateVector psi = random_state(4, rng);
  StateVector back = parse_state(dump_state(psi, 0.0), 4);
  CHECK(deviation(psi, back) < 1e-15);

  CHECK_THROWS_AS(parse_state("10 nonsense\n", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_state("120 1 0\n", 3), std::invalid_argument);
}

TEST_CASE("case-keyed rng streams are reproducible and independent") {
  auto a1 = case_rng(42, 9);
  auto a2 = case_rng(42, 9);
  StateVector s1 = random_state(5, a1);
  StateVector s2 = random_state(5, a2);
  for (std::uint64_t i = 0; i < s1.dim(); ++i) CHECK(s1.amps[i] == s2.amps[i]);

  auto b = case_rng(42, 10);
  StateVector s3 = random_state(5, b);
  CHECK(deviation(s1, s3) > 1e-3);

  StateVector on_support = random_state_on_support(4, {0b0011, 0b1100}, a1);
  for (std::uint64_t i = 0; i < on_support.dim(); ++i) {
    if (i != 0b0011 && i != 0b1100) CHECK(on_support.amps[i] == cdouble(0.0, 0.0));
  }
  CHECK(std::abs(on_support.norm() - 1.0) < 1e-12);
}
