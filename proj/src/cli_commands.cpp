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

#include "uccsynth/cli_commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include "uccsynth/circuit.hpp"
#include "uccsynth/fermion.hpp"
#include "uccsynth/pauli_exp.hpp"
#include "uccsynth/resources.hpp"
#include "uccsynth/schemes.hpp"
#include "uccsynth/statevector.hpp"

namespace uccsynth {
namespace {

// Hard ceiling on register sizes for the synthesis-only paths. Statevector
// commands are capped much lower by kMaxSimQubits.
constexpr int kMaxSynthOrbitals = 4096;

std::string num17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string sci6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

// parse_excitation validates the operator after parsing and tags the two
// failure classes through its message prefix; malformed text maps to the
// parse exit code, a well-formed but invalid operator to the semantic one.
int parse_operator(const std::string& spec, ExcitationOperator& op, std::ostream& err) {
  try {
    op = parse_excitation(spec);
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return std::string_view(e.what()).rfind("excitation parse:", 0) == 0 ? kExitParseError
                                                                         : kExitSemanticError;
  }
  return kExitOk;
}

// Picks the register size: the caller's --orbitals if given, otherwise the
// smallest register covering the operator.
int resolve_orbitals(const ExcitationOperator& op, int requested, int& orbitals,
                     std::ostream& err) {
  int needed = 0;
  for (int p : op.occupied) needed = std::max(needed, p + 1);
  for (int p : op.virtuals) needed = std::max(needed, p + 1);
  orbitals = requested > 0 ? requested : needed;
  if (orbitals < needed) {
    err << "orbitals: a register of " << orbitals << " cannot hold orbital " << (needed - 1)
        << '\n';
    return kExitSemanticError;
  }
  if (orbitals > kMaxSynthOrbitals) {
    err << "orbitals: at most " << kMaxSynthOrbitals << " supported\n";
    return kExitSemanticError;
  }
  return kExitOk;
}

int check_theta(double theta, std::ostream& err) {
  if (!std::isfinite(theta)) {
    err << "theta must be finite\n";
    return kExitSemanticError;
  }
  return kExitOk;
}

int write_text_file(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream file(path, std::ios::binary);
  file << text;
  file.flush();
  if (!file) {
    err << "cannot write '" << path << "'\n";
    return kExitSemanticError;
  }
  return kExitOk;
}

DecompositionPlan plan_for(SchemeId scheme, const ExcitationOperator& op,
                           const std::vector<int>& anc) {
  switch (scheme) {
    case SchemeId::Triple:
      return plan_triple(op.occupied, op.virtuals, anc);
    case SchemeId::Quadruple:
      return plan_quadruple(op.occupied, op.virtuals, anc);
    case SchemeId::Quintuple:
      return plan_quintuple(op.occupied, op.virtuals, anc);
    case SchemeId::Sextuple24:
      return plan_sextuple_24(op.occupied, op.virtuals, anc);
    case SchemeId::Sextuple33:
      return plan_sextuple_33(op.occupied, op.virtuals, anc);
  }
  throw std::logic_error("plan_for: unhandled scheme");
}

int verify_factor(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  if (args.op_spec.empty()) {
    err << "verify factor needs --op\n";
    return kExitSemanticError;
  }
  ExcitationOperator op;
  if (int rc = parse_operator(args.op_spec, op, err); rc != kExitOk) return rc;
  int orbitals = 0;
  if (int rc = resolve_orbitals(op, args.orbitals, orbitals, err); rc != kExitOk) return rc;
  if (orbitals > kMaxSimQubits) {
    err << "a register of " << orbitals << " qubits exceeds the simulation cap of "
        << kMaxSimQubits << '\n';
    return kExitResourceCap;
  }
  JwConvention conv = JwConvention::identity(orbitals);
  int oracle_cap = oracle_cap_from_env();

  double max_dev = 0.0;
  double oracle_dev = 0.0;
  int oracle_cases = 0;
  for (int i = 0; i < args.trials; ++i) {
    auto theta_rng = case_rng(args.seed, 0xFAC7000000ULL + std::uint64_t(i));
    double theta =
        std::uniform_real_distribution<double>(-std::numbers::pi, std::numbers::pi)(theta_rng);
    auto state_rng = case_rng(args.seed, 0xFAC8000000ULL + std::uint64_t(i));
    StateVector input = random_state(orbitals, state_rng);

    StateVector actual = input;
    apply_circuit(actual, synth_ucc_factor(op, theta, conv));
    StateVector exact = input;
    apply_ucc_factor_exact(exact, op, theta, conv);
    max_dev = std::max(max_dev, deviation(actual, exact));

    if (orbitals <= oracle_cap) {
      StateVector series = input;
      apply_generator_exponential(series, op, theta, conv);
      oracle_dev = std::max(oracle_dev, deviation(actual, series));
      ++oracle_cases;
    }
  }

  out << "target=factor operator=" << to_string(op) << " qubits=" << orbitals
      << " cases=" << args.trials << '\n';
  out << "max_deviation=" << sci6(max_dev);
  if (oracle_cases > 0)
    out << " oracle_deviation=" << sci6(oracle_dev) << " oracle_cases=" << oracle_cases;
  out << '\n';
  bool pass = max_dev < 1e-9 && (oracle_cases == 0 || oracle_dev < 1e-9);
  out << "verdict=" << (pass ? "pass" : "fail") << '\n';
  return pass ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int oracle_cap_from_env() {
  int cap = 14;
  if (const char* raw = std::getenv("UCCSYNTH_ORACLE_CAP")) {
    try {
      cap = std::stoi(raw);
    } catch (const std::exception&) {
      // Unparseable override, keep the default.
    }
  }
  return std::clamp(cap, 1, kMaxSimQubits);
}

int cmd_synth(const SynthArgs& args, std::ostream& out, std::ostream& err) {
  ExcitationOperator op;
  if (int rc = parse_operator(args.op_spec, op, err); rc != kExitOk) return rc;
  int orbitals = 0;
  if (int rc = resolve_orbitals(op, args.orbitals, orbitals, err); rc != kExitOk) return rc;
  if (int rc = check_theta(args.theta, err); rc != kExitOk) return rc;

  Circuit circuit = synth_ucc_factor(op, args.theta, JwConvention::identity(orbitals));
  GateCounts counts = count_gates(circuit);
  out << "operator=" << to_string(op) << " theta=" << num17(args.theta) << " qubits=" << orbitals
      << '\n';
  out << "cnot=" << counts.cnot << " rotations=" << counts.single_qubit_rotation
      << " cliffords=" << counts.single_qubit_clifford
      << " mcrz=" << counts.multi_controlled_rotation << " total=" << counts.total() << '\n';
  if (args.out_path.empty()) {
    out << export_text(circuit);
    return kExitOk;
  }
  return write_text_file(args.out_path, export_text(circuit), err);
}

int cmd_decompose(const DecomposeArgs& args, std::ostream& out, std::ostream& err) {
  std::optional<SchemeId> scheme = parse_scheme(args.scheme);
  if (!scheme) {
    err << "unknown scheme '" << args.scheme << "'\n";
    return kExitParseError;
  }
  ExcitationOperator op;
  if (args.op_spec.empty()) {
    // No operator given: decompose the canonical one for the scheme's rank.
    int n = scheme_rank(*scheme);
    for (int p = 0; p < n; ++p) op.occupied.push_back(p);
    for (int p = n; p < 2 * n; ++p) op.virtuals.push_back(p);
  } else if (int rc = parse_operator(args.op_spec, op, err); rc != kExitOk) {
    return rc;
  }
  if (op.rank() != scheme_rank(*scheme)) {
    err << "scheme " << scheme_name(*scheme) << " decomposes rank-" << scheme_rank(*scheme)
        << " operators, got rank " << op.rank() << '\n';
    return kExitSemanticError;
  }
  int orbitals = 0;
  if (int rc = resolve_orbitals(op, args.orbitals, orbitals, err); rc != kExitOk) return rc;
  if (int rc = check_theta(args.theta, err); rc != kExitOk) return rc;

  DecompositionPlan plan = plan_for(*scheme, op, {orbitals, orbitals + 1});
  GateCounts decomposed = decomposed_counts(*scheme, orbitals);
  GateCounts traditional = traditional_counts(plan.rank, orbitals);

  out << "scheme=" << scheme_name(*scheme) << " operator=" << to_string(op)
      << " theta=" << num17(args.theta) << " orbitals=" << orbitals
      << " qubits=" << plan.min_qubits() << '\n';
  out << render_plan(plan);
  out << "decomposed_cnot=" << decomposed.cnot << " traditional_cnot=" << traditional.cnot
      << '\n';
  out << "decomposed_rotations=" << decomposed.single_qubit_rotation
      << " traditional_rotations=" << traditional.single_qubit_rotation << '\n';

  if (!args.out_path.empty()) {
    Circuit compiled = compile_plan(plan, args.theta, plan_convention(plan));
    return write_text_file(args.out_path, export_text(compiled), err);
  }
  return kExitOk;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  if (args.trials <= 0) {
    err << "trials must be positive\n";
    return kExitSemanticError;
  }
  if (args.what == "factor") return verify_factor(args, out, err);

  DecompositionPlan plan;
  std::string label;
  if (std::optional<SchemeId> scheme = parse_scheme(args.what)) {
    plan = plan_for_scheme(*scheme, 2 * scheme_rank(*scheme));
    label = scheme_name(*scheme);
  } else if (args.what == "naive-quad") {
    plan = plan_naive_two_doubles({0, 1, 2, 3}, {4, 5, 6, 7});
    label = args.what;
  } else if (args.what == "uncontrolled-quad") {
    plan = plan_uncontrolled({0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9});
    label = args.what;
  } else {
    err << "unknown verify target '" << args.what << "'\n";
    return kExitParseError;
  }

  JwConvention conv = plan_convention(plan);
  if (conv.total_qubits > kMaxSimQubits) {
    err << "plan needs " << conv.total_qubits << " qubits, above the simulation cap of "
        << kMaxSimQubits << '\n';
    return kExitResourceCap;
  }

  SweepOptions opt;
  opt.n_thetas = std::min(args.trials, 10);
  opt.states_per_theta = (args.trials + opt.n_thetas - 1) / opt.n_thetas;
  opt.seed = args.seed;
  SweepResult result = verify_plan(plan, conv, opt);

  out << "target=" << label << " qubits=" << conv.total_qubits << " cases=" << result.cases
      << '\n';
  out << "max_deviation=" << sci6(result.max_deviation)
      << " max_leakage=" << sci6(result.max_leakage) << '\n';
  bool pass = result.max_deviation < 1e-9 && result.max_leakage < 1e-10;

  if (args.orderings) {
    if (args.n_orderings <= 0) {
      err << "orderings must be positive\n";
      return kExitSemanticError;
    }
    SweepOptions reduced;
    reduced.n_thetas = 3;
    reduced.states_per_theta = 2;
    reduced.seed = args.seed;
    std::vector<OrderingReport> reports = verify_orderings(plan, args.n_orderings, reduced);
    int passed = 0;
    for (const OrderingReport& report : reports) {
      out << "ordering=" << join_ints(report.orbital_to_qubit)
          << " deviation=" << sci6(report.max_deviation)
          << " result=" << (report.passed ? "pass" : "fail") << '\n';
      passed += report.passed ? 1 : 0;
    }
    out << "orderings_passed=" << passed << "/" << reports.size() << '\n';
    pass = pass && passed == int(reports.size());
  }

  out << "verdict=" << (pass ? "pass" : "fail") << '\n';
  return pass ? kExitOk : kExitVerificationFailed;
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  if (args.ranks.empty()) {
    err << "sweep needs at least one rank\n";
    return kExitSemanticError;
  }
  std::vector<SchemeId> schemes;
  for (int rank : args.ranks) {
    switch (rank) {
      case 3:
        schemes.push_back(SchemeId::Triple);
        break;
      case 4:
        schemes.push_back(SchemeId::Quadruple);
        break;
      case 5:
        schemes.push_back(SchemeId::Quintuple);
        break;
      case 6:
        schemes.push_back(SchemeId::Sextuple24);
        schemes.push_back(SchemeId::Sextuple33);
        break;
      default:
        err << "no decomposition scheme covers rank " << rank << '\n';
        return kExitSemanticError;
    }
  }
  if (args.m_hi > kMaxSynthOrbitals) {
    err << "orbital sweep capped at " << kMaxSynthOrbitals << '\n';
    return kExitSemanticError;
  }
  std::string csv = emit_sweep_csv(schemes, args.m_lo, args.m_hi);
  if (args.out_path.empty()) {
    out << csv;
    return kExitOk;
  }
  return write_text_file(args.out_path, csv, err);
}

}  // namespace uccsynth
