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

// Acceptance gate for the synthesis stack. Each criterion below re-derives
// its expected values from first principles (dense linear algebra, series
// expansion, or closed-form counting) rather than from the code under test,
// prints one [PASS]/[FAIL] line, and the binary exits nonzero if anything
// fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "uccsynth/circuit.hpp"
#include "uccsynth/controlled.hpp"
#include "uccsynth/fermion.hpp"
#include "uccsynth/pauli.hpp"
#include "uccsynth/pauli_exp.hpp"
#include "uccsynth/resources.hpp"
#include "uccsynth/schemes.hpp"
#include "uccsynth/statevector.hpp"

using namespace uccsynth;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

Outcome fail(std::string detail) { return {false, std::move(detail)}; }
Outcome pass() { return {true, {}}; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* format, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, format, a, b);
  return buf;
}

void apply_dense(StateVector& state, const Eigen::MatrixXcd& u) {
  Eigen::Map<Eigen::VectorXcd> vec(state.amps.data(), static_cast<Eigen::Index>(state.dim()));
  vec = (u * vec).eval();
}

// Criterion 1: the eight Pauli words of the canonical double-excitation
// generator pairwise anticommute on exactly hamming-distance-many indices:
// 0 on the diagonal, 4 against the fully axis-swapped partner, 2 otherwise.
// All 64 table entries must match, and the check must be essentially free.
Outcome criterion_commutation_table() {
  auto t0 = std::chrono::steady_clock::now();
  PauliSum generator = jw_generator({{0, 1}, {2, 3}}, JwConvention::identity(4));
  CommutationReport report = pairwise_commutation_report(generator);
  if (report.terms.size() != 8)
    return fail("expected 8 generator words, got " + std::to_string(report.terms.size()));

  std::vector<std::string> labels;
  for (const PauliString& word : report.terms) {
    std::string label;
    for (int q = 0; q < 4; ++q) {
      auto it = word.axes.find(q);
      if (it == word.axes.end()) return fail("word lacks an axis on qubit " + std::to_string(q));
      label += axis_letter(it->second);
    }
    labels.push_back(label);
  }

  int checked = 0;
  for (int i = 0; i < 8; ++i) {
    int partners = 0;
    for (int j = 0; j < 8; ++j) {
      int expected = 0;
      for (int q = 0; q < 4; ++q) expected += labels[i][q] != labels[j][q] ? 1 : 0;
      if (report.counts(i, j) != expected)
        return fail("entry (" + labels[i] + "," + labels[j] + ") = " +
                    std::to_string(report.counts(i, j)) + ", expected " +
                    std::to_string(expected));
      if (report.counts(i, j) % 2 != 0) return fail("odd anticommutation count, words clash");
      partners += report.counts(i, j) == 4 ? 1 : 0;
      ++checked;
    }
    if (partners != 1) return fail("word " + labels[i] + " should have exactly one 4-partner");
  }
  if (checked != 64) return fail("checked " + std::to_string(checked) + " of 64 entries");

  double elapsed = seconds_since(t0);
  if (elapsed >= 1e-3) return fail(fmt("table check took %.6f s, budget 0.001 s", elapsed));
  return pass();
}

// Criterion 2: the determinant-pair fast path reproduces exp(theta (A - A+))
// for ranks 1 through 4 on registers up to 14 orbitals, judged against a
// dense eigendecomposition where affordable and a scaled series elsewhere.
Outcome criterion_exact_action() {
  auto t0 = std::chrono::steady_clock::now();
  struct Probe {
    ExcitationOperator op;
    int orbitals;
  };
  const std::vector<Probe> probes = {
      {{{0}, {1}}, 2},           {{{0}, {2}}, 3},
      {{{0, 1}, {2, 3}}, 4},     {{{0, 3}, {5, 1}}, 6},
      {{{0, 1, 2}, {3, 4, 5}}, 6}, {{{0, 2, 4}, {7, 5, 1}}, 8},
      {{{0, 1, 2, 3}, {4, 5, 6, 7}}, 8}, {{{0, 2, 5, 9}, {13, 3, 7, 11}}, 14},
  };

  double worst = 0.0;
  for (std::size_t p = 0; p < probes.size(); ++p) {
    const Probe& probe = probes[p];
    JwConvention conv = JwConvention::identity(probe.orbitals);
    for (int t = 0; t < 20; ++t) {
      auto rng = case_rng(101, (std::uint64_t(p) << 8) | std::uint64_t(t));
      double theta =
          std::uniform_real_distribution<double>(-std::numbers::pi, std::numbers::pi)(rng);
      StateVector input = random_state(probe.orbitals, rng);

      StateVector fast = input;
      apply_ucc_factor_exact(fast, probe.op, theta, conv);

      StateVector reference = input;
      if (probe.orbitals <= 10) {
        apply_dense(reference, matrix_exponential_oracle(probe.op, theta, conv));
      } else {
        apply_generator_exponential(reference, probe.op, theta, conv);
      }
      worst = std::max(worst, deviation(fast, reference));
    }
  }
  double elapsed = seconds_since(t0);
  if (worst >= 1e-11) return fail(fmt("max deviation %.3e exceeds 1e-11", worst));
  if (elapsed >= 60.0) return fail(fmt("took %.1f s, budget 60 s", elapsed));
  return pass();
}

// Criterion 3: the synthesized rank-2 circuit is unitarily exact for 4..8
// orbitals and stays exact under permuted orbital-to-qubit conventions.
Outcome criterion_double_synthesis() {
  double worst = 0.0;
  for (int m = 4; m <= 8; ++m) {
    ExcitationOperator op{{0, 1}, {2, m - 1}};
    JwConvention conv = JwConvention::identity(m);
    double theta = 0.37 + 0.11 * m;
    Eigen::MatrixXcd synthesized = unitary(synth_ucc_factor(op, theta, conv), m);
    Eigen::MatrixXcd expected = matrix_exponential_oracle(op, theta, conv);
    worst = std::max(worst, (synthesized - expected).cwiseAbs().maxCoeff());
  }
  if (worst >= 1e-11) return fail(fmt("identity-convention deviation %.3e", worst));

  const int m = 6;
  ExcitationOperator op{{0, 4}, {2, 5}};
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  auto rng = case_rng(77, 0);
  for (int i = 0; i < 5; ++i) {
    std::shuffle(perm.begin(), perm.end(), rng);
    JwConvention conv{m, perm};
    conv.validate();
    Eigen::MatrixXcd synthesized = unitary(synth_ucc_factor(op, 0.81, conv), m);
    Eigen::MatrixXcd expected = matrix_exponential_oracle(op, 0.81, conv);
    double dev = (synthesized - expected).cwiseAbs().maxCoeff();
    if (dev >= 1e-11) return fail(fmt("permuted-convention deviation %.3e", dev));
  }
  return pass();
}

Outcome run_scheme_sweep(SchemeId scheme, double budget_seconds) {
  auto t0 = std::chrono::steady_clock::now();
  DecompositionPlan plan = plan_for_scheme(scheme, 2 * scheme_rank(scheme));
  SweepOptions opt;  // 10 thetas x 5 states, structured first state
  opt.seed = 20260815;
  SweepResult result = verify_plan(plan, plan_convention(plan), opt);
  double elapsed = seconds_since(t0);

  if (result.cases != 50) return fail("expected 50 cases, ran " + std::to_string(result.cases));
  if (result.max_deviation >= 1e-9)
    return fail(fmt("max deviation %.3e exceeds 1e-9", result.max_deviation));
  if (result.max_leakage >= 1e-10)
    return fail(fmt("max ancilla leakage %.3e exceeds 1e-10", result.max_leakage));
  if (elapsed >= budget_seconds)
    return fail(fmt("took %.1f s, budget %.0f s", elapsed, budget_seconds));
  return pass();
}

// Criterion 4: the quadruple scheme on its canonical 12-qubit register, 50
// randomized cases, plus an explicit superposition that keeps four shelved
// determinants in flight at once.
Outcome criterion_quadruple() {
  Outcome sweep = run_scheme_sweep(SchemeId::Quadruple, 120.0);
  if (!sweep.passed) return sweep;

  DecompositionPlan plan = plan_for_scheme(SchemeId::Quadruple, 8);
  JwConvention conv = plan_convention(plan);
  // Four determinants the first shelving factor moves simultaneously (both
  // occupied orbitals 0,1 set; shelving targets 4 and 8 clear), plus the
  // target pair itself.
  StateVector input(conv.total_qubits);
  const std::vector<std::uint64_t> masks = {0b00000011, 0b00100011, 0b01000011,
                                            0b10000011, 0b00001111, 0b11110000};
  for (std::size_t i = 0; i < masks.size(); ++i)
    input.amps[masks[i]] = cdouble(0.3 + 0.1 * double(i), 0.05 * double(i));
  input.normalize();

  const double theta = 0.9;
  StateVector actual = input;
  apply_circuit(actual, compile_plan(plan, theta, conv));
  StateVector expected = input;
  apply_ucc_factor_exact(expected, plan.target(), theta, conv);

  double dev = deviation(actual, expected);
  if (dev >= 1e-9) return fail(fmt("shelved-superposition deviation %.3e", dev));
  double leak = sector_restrict(actual, {8, 9, 10, 11}).leaked_weight;
  if (leak >= 1e-10) return fail(fmt("shelved-superposition leakage %.3e", leak));
  return pass();
}

// Criterion 6: both failure exhibits show their analytically predicted wrong
// amplitudes, and both deviate grossly from the exact factor at theta=pi/4.
Outcome criterion_exhibits() {
  const double xi1 = 0.8, xi2 = 0.6;

  // Naive pair of doubles: cross terms connect |0,1,2,3> and |4,5,6,7>
  // through the half-excited determinants 0x3C and 0xC3.
  DecompositionPlan naive = plan_naive_two_doubles({0, 1, 2, 3}, {4, 5, 6, 7});
  JwConvention nconv = plan_convention(naive);
  {
    const double theta = 0.8;
    const double c = std::cos(theta), s = std::sin(theta);
    StateVector input(nconv.total_qubits);
    input.amps[0x0F] = xi1;
    input.amps[0xF0] = xi2;
    StateVector out = input;
    apply_circuit(out, compile_plan(naive, theta, nconv));

    auto check = [&](std::uint64_t mask, double expected, const char* what) -> Outcome {
      double got = std::abs(out.amps[mask] - cdouble(expected, 0.0));
      if (got >= 1e-12) return fail(std::string(what) + ": " + fmt("off by %.3e", got));
      return pass();
    };
    for (Outcome o : {check(0x0F, c * c * xi1 + s * s * xi2, "naive amp(0x0F)"),
                      check(0xF0, s * s * xi1 + c * c * xi2, "naive amp(0xF0)"),
                      check(0x3C, c * s * (xi1 - xi2), "naive amp(0x3C)"),
                      check(0xC3, c * s * (xi1 - xi2), "naive amp(0xC3)")})
      if (!o.passed) return o;

    StateVector at_quarter = input;
    apply_circuit(at_quarter, compile_plan(naive, std::numbers::pi / 4, nconv));
    StateVector exact = input;
    apply_ucc_factor_exact(exact, naive.target(), std::numbers::pi / 4, nconv);
    if (deviation(at_quarter, exact) <= 0.1)
      return fail("naive plan unexpectedly close to the exact factor");
  }

  // Uncontrolled central step: a partially excited determinant rides the
  // shelving and leaks onto the ancilla orbitals.
  DecompositionPlan open = plan_uncontrolled({0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9});
  JwConvention oconv = plan_convention(open);
  {
    const double theta = 0.7;
    const std::uint64_t start = (1u << 0) | (1u << 2) | (1u << 5) | (1u << 7);
    const std::uint64_t leaked = (1u << 0) | (1u << 2) | (1u << 8) | (1u << 9);
    StateVector input = StateVector::basis_state(oconv.total_qubits, start);
    StateVector out = input;
    apply_circuit(out, compile_plan(open, theta, oconv));

    if (std::abs(out.amps[start] - cdouble(std::cos(theta), 0.0)) >= 1e-12)
      return fail("uncontrolled plan: surviving amplitude is not cos(theta)");
    if (std::abs(out.amps[leaked] - cdouble(-std::sin(theta), 0.0)) >= 1e-12)
      return fail("uncontrolled plan: ancilla amplitude is not -sin(theta)");

    StateVector at_quarter = input;
    apply_circuit(at_quarter, compile_plan(open, std::numbers::pi / 4, oconv));
    StateVector exact = input;
    apply_ucc_factor_exact(exact, open.target(), std::numbers::pi / 4, oconv);
    if (deviation(at_quarter, exact) <= 0.1)
      return fail("uncontrolled plan unexpectedly close to the exact factor");
  }
  return pass();
}

// Criterion 7: gate accounting. The quadruple's decomposed CNOT column is
// exactly 80M + 208 for every M in 8..64, the traditional bracket matches a
// really synthesized spanning factor for ranks 1..3, the quadruple crossover
// sits at M = 3, and the sweep CSV is byte-for-byte reproducible.
Outcome criterion_resources() {
  for (int m = 8; m <= 64; ++m) {
    long long cnot = decomposed_counts(SchemeId::Quadruple, m).cnot;
    if (cnot != 80LL * m + 208)
      return fail("quadruple CNOTs at M=" + std::to_string(m) + ": " + std::to_string(cnot));
  }

  for (int m : {4, 8, 12}) {
    const std::vector<ExcitationOperator> spanning = {
        {{0}, {m - 1}}, {{0, 1}, {2, m - 1}}, {{0, 1, 2}, {3, 4, m - 1}}};
    for (const ExcitationOperator& op : spanning) {
      if (m < 2 * op.rank()) continue;
      GateCounts actual = count_gates(synth_ucc_factor(op, 0.4, JwConvention::identity(m)));
      GateCounts bracket = traditional_counts(op.rank(), m);
      if (actual.cnot != bracket.cnot || actual.single_qubit_rotation != bracket.single_qubit_rotation ||
          actual.single_qubit_clifford != bracket.single_qubit_clifford)
        return fail("spanning rank-" + std::to_string(op.rank()) + " factor at M=" +
                    std::to_string(m) + " misses the traditional bracket");
    }
  }

  CrossoverResult quad = crossover(SchemeId::Quadruple);
  if (quad.kind != CrossoverKind::At || quad.orbitals != 3)
    return fail("quadruple crossover reported at M=" + std::to_string(quad.orbitals));

  std::string once = emit_sweep_csv({SchemeId::Triple, SchemeId::Quadruple}, 8, 32);
  std::string twice = emit_sweep_csv({SchemeId::Triple, SchemeId::Quadruple}, 8, 32);
  if (once != twice) return fail("sweep CSV is not deterministic");
  if (once.find("4,10,quadruple,2304,1008,128,80,2048,320") == std::string::npos)
    return fail("sweep CSV lacks the expected quadruple row at M=10");
  return pass();
}

// Criterion 8: the recursive rotation lowering. Exact CNOT counts for one
// and two controls, and unitary exactness against the unlowered gate for
// k = 1..4.
Outcome criterion_lowering() {
  if (mcrz_cnot_cost(1) != 2 || count_gates(lower_mcrz(Gate::mcrz({0}, 1, 0.7), 2)).cnot != 2)
    return fail("single-control lowering should use exactly 2 CNOTs");
  if (mcrz_cnot_cost(2) != 8 || count_gates(lower_mcrz(Gate::mcrz({0, 1}, 2, 0.7), 3)).cnot != 8)
    return fail("double-control lowering should use exactly 8 CNOTs");

  for (int k = 1; k <= 4; ++k) {
    std::vector<int> controls(k);
    std::iota(controls.begin(), controls.end(), 0);
    Gate gate = Gate::mcrz(controls, k, 1.234 + 0.1 * k);
    Circuit raw(k + 1);
    raw.append(gate);
    Circuit lowered = lower_mcrz(gate, k + 1);
    double dev = (unitary(raw, k + 1) - unitary(lowered, k + 1)).cwiseAbs().maxCoeff();
    if (dev >= 1e-11) return fail(fmt("k=%.0f lowering deviates by %.3e", double(k), dev));
    if (count_gates(lowered).multi_controlled_rotation != 0)
      return fail("lowered circuit still contains a multi-controlled rotation");
  }
  return pass();
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* what;
    Outcome (*body)();
  };
  const std::vector<Entry> entries = {
      {1, "double-excitation generator words commute pairwise (64-entry table)",
       criterion_commutation_table},
      {2, "exact factor action matches dense and series references, ranks 1-4",
       criterion_exact_action},
      {3, "synthesized double is unitarily exact, identity and permuted conventions",
       criterion_double_synthesis},
      {4, "quadruple scheme: 50-case randomized sweep plus shelved superposition",
       criterion_quadruple},
      {5, "triple, quintuple, and both sextuple schemes pass the same sweep",
       [] {
         for (SchemeId scheme : {SchemeId::Triple, SchemeId::Quintuple}) {
           Outcome o = run_scheme_sweep(scheme, 120.0);
           if (!o.passed) return o;
         }
         for (SchemeId scheme : {SchemeId::Sextuple24, SchemeId::Sextuple33}) {
           Outcome o = run_scheme_sweep(scheme, 600.0);
           if (!o.passed) return o;
         }
         return pass();
       }},
      {6, "both failure exhibits reproduce their analytic defect amplitudes",
       criterion_exhibits},
      {7, "gate accounting: affine quadruple costs, brackets, crossover, CSV",
       criterion_resources},
      {8, "multi-controlled rotation lowering is exact with pinned CNOT costs",
       criterion_lowering},
  };

  int failures = 0;
  for (const Entry& entry : entries) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = entry.body();
    } catch (const std::exception& e) {
      outcome = fail(std::string("unhandled exception: ") + e.what());
    }
    double elapsed = seconds_since(t0);
    std::printf("[%s] criterion %d: %s (%.2f s)\n", outcome.passed ? "PASS" : "FAIL", entry.id,
                entry.what, elapsed);
    if (!outcome.passed) {
      std::printf("       %s\n", outcome.detail.c_str());
      ++failures;
    }
  }
  std::printf("%d of %zu criteria passed\n", int(entries.size()) - failures, entries.size());
  return failures == 0 ? 0 : 1;
}
