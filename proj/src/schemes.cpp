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

#include "uccsynth/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "uccsynth/controlled.hpp"
#include "uccsynth/pauli_exp.hpp"
#include "uccsynth/statevector.hpp"

namespace uccsynth {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

Step shelve(std::vector<int> occ, std::vector<int> virt) {
  Step s;
  s.op = {std::move(occ), std::move(virt)};
  s.fixed_angle = kHalfPi;
  return s;
}

// The correction steps run the shelving excitations in the opposite
// direction; with the index lists kept in the same written order the
// reversed operator is exactly the adjoint of the original.
Step unshelve(const Step& s) { return shelve(s.op.virtuals, s.op.occupied); }

Step central(std::vector<int> controls, std::vector<int> occ, std::vector<int> virt) {
  Step s;
  s.kind = controls.empty() ? StepKind::UccFactor : StepKind::ControlledUccFactor;
  s.controls = std::move(controls);
  s.op = {std::move(occ), std::move(virt)};
  s.free_angle = true;
  return s;
}

void check_shape(const std::vector<int>& occ, std::size_t n_occ, const std::vector<int>& virt,
                 std::size_t n_virt, const std::vector<int>& anc, std::size_t n_anc) {
  if (occ.size() != n_occ || virt.size() != n_virt || anc.size() != n_anc)
    throw std::invalid_argument("decomposition plan: wrong index list lengths");
  std::set<int> all;
  for (const auto* list : {&occ, &virt, &anc})
    for (int p : *list) {
      if (p < 0) throw std::invalid_argument("decomposition plan: negative orbital index");
      if (!all.insert(p).second)
        throw std::invalid_argument("decomposition plan: orbital index collision");
    }
}

DecompositionPlan finish_plan(int rank, std::vector<int> occ, std::vector<int> virt,
                              std::vector<int> anc, std::vector<Step> steps) {
  DecompositionPlan plan;
  plan.rank = rank;
  plan.occupied = std::move(occ);
  plan.virtuals = std::move(virt);
  plan.ancilla_orbitals = std::move(anc);
  plan.steps = std::move(steps);

  std::size_t n_copies = 0;
  for (const auto& s : plan.steps) n_copies = std::max(n_copies, s.controls.size());
  int slots = plan.orbital_slots();
  for (std::size_t i = 0; i < n_copies; ++i)
    plan.control_copy_ancillas.push_back(slots + static_cast<int>(i));
  return plan;
}

}  // namespace

int DecompositionPlan::orbital_slots() const {
  int top = -1;
  for (const auto* list : {&occupied, &virtuals, &ancilla_orbitals})
    for (int p : *list) top = std::max(top, p);
  return top + 1;
}

int DecompositionPlan::min_qubits() const {
  int n = orbital_slots();
  for (int q : control_copy_ancillas) n = std::max(n, q + 1);
  return n;
}

DecompositionPlan plan_triple(const std::vector<int>& occ, const std::vector<int>& virt,
                              const std::vector<int>& anc) {
  check_shape(occ, 3, virt, 3, anc, 2);
  const int a = occ[0], b = occ[1], c = occ[2];
  const int w = virt[0], x = virt[1], y = virt[2];
  const int h1 = anc[0], h2 = anc[1];
  std::vector<Step> steps;
  steps.push_back(shelve({a, b}, {w, h1}));
  steps.push_back(shelve({c}, {h2}));
  steps.push_back(central({w}, {h1, h2}, {x, y}));
  steps.push_back(unshelve(steps[1]));
  steps.push_back(unshelve(steps[0]));
  return finish_plan(3, occ, virt, anc, std::move(steps));
}

DecompositionPlan plan_quadruple(const std::vector<int>& occ, const std::vector<int>& virt,
                                 const std::vector<int>& anc) {
  check_shape(occ, 4, virt, 4, anc, 2);
  const int a = occ[0], b = occ[1], c = occ[2], d = occ[3];
  const int w = virt[0], x = virt[1], y = virt[2], z = virt[3];
  const int h1 = anc[0], h2 = anc[1];
  std::vector<Step> steps;
  steps.push_back(shelve({a, b}, {w, h1}));
  steps.push_back(shelve({c, d}, {y, h2}));
  steps.push_back(central({w, y}, {h1, h2}, {x, z}));
  steps.push_back(unshelve(steps[1]));
  steps.push_back(unshelve(steps[0]));
  return finish_plan(4, occ, virt, anc, std::move(steps));
}

DecompositionPlan plan_quintuple(const std::vector<int>& occ, const std::vector<int>& virt,
                                 const std::vector<int>& anc) {
  check_shape(occ, 5, virt, 5, anc, 2);
  const int a = occ[0], b = occ[1], c = occ[2], d = occ[3], e = occ[4];
  const int v = virt[0], w = virt[1], x = virt[2], y = virt[3], z = virt[4];
  const int h1 = anc[0], h2 = anc[1];
  std::vector<Step> steps;
  steps.push_back(shelve({a, b}, {v, h1}));
  steps.push_back(shelve({c, d, e}, {x, y, h2}));
  steps.push_back(central({v, x, y}, {h1, h2}, {w, z}));
  steps.push_back(unshelve(steps[1]));
  steps.push_back(unshelve(steps[0]));
  return finish_plan(5, occ, virt, anc, std::move(steps));
}

DecompositionPlan plan_sextuple_24(const std::vector<int>& occ, const std::vector<int>& virt,
                                   const std::vector<int>& anc) {
  check_shape(occ, 6, virt, 6, anc, 2);
  const int a = occ[0], b = occ[1], c = occ[2], d = occ[3], e = occ[4], f = occ[5];
  const int u = virt[0], v = virt[1], w = virt[2], x = virt[3], y = virt[4], z = virt[5];
  const int h1 = anc[0], h2 = anc[1];
  std::vector<Step> steps;
  steps.push_back(shelve({a, b}, {u, h1}));
  steps.push_back(shelve({c, d, e, f}, {w, x, y, h2}));
  steps.push_back(central({u, w, x, y}, {h1, h2}, {v, z}));
  steps.push_back(unshelve(steps[1]));
  steps.push_back(unshelve(steps[0]));
  return finish_plan(6, occ, virt, anc, std::move(steps));
}

DecompositionPlan plan_sextuple_33(const std::vector<int>& occ, const std::vector<int>& virt,
                                   const std::vector<int>& anc) {
  check_shape(occ, 6, virt, 6, anc, 2);
  const int a = occ[0], b = occ[1], c = occ[2], d = occ[3], e = occ[4], f = occ[5];
  const int u = virt[0], v = virt[1], w = virt[2], x = virt[3], y = virt[4], z = virt[5];
  const int h1 = anc[0], h2 = anc[1];
  std::vector<Step> steps;
  steps.push_back(shelve({a, b, c}, {u, v, h1}));
  steps.push_back(shelve({d, e, f}, {x, y, h2}));
  steps.push_back(central({u, v, x, y}, {h1, h2}, {w, z}));
  steps.push_back(unshelve(steps[1]));
  steps.push_back(unshelve(steps[0]));
  return finish_plan(6, occ, virt, anc, std::move(steps));
}

DecompositionPlan plan_naive_two_doubles(const std::vector<int>& occ,
                                         const std::vector<int>& virt) {
  check_shape(occ, 4, virt, 4, {}, 0);
  std::vector<Step> steps;
  steps.push_back(central({}, {occ[0], occ[1]}, {virt[0], virt[1]}));
  steps.push_back(central({}, {occ[2], occ[3]}, {virt[2], virt[3]}));
  return finish_plan(4, occ, virt, {}, std::move(steps));
}

DecompositionPlan plan_uncontrolled(const std::vector<int>& occ, const std::vector<int>& virt,
                                    const std::vector<int>& anc) {
  DecompositionPlan plan = plan_quadruple(occ, virt, anc);
  Step& middle = plan.steps[2];
  middle.kind = StepKind::UccFactor;
  middle.controls.clear();
  plan.control_copy_ancillas.clear();
  return plan;
}

Circuit compile_plan(const DecompositionPlan& plan, double theta, const JwConvention& conv) {
  conv.validate();
  Circuit c{conv.total_qubits, {}};
  for (const Step& s : plan.steps) {
    if (s.kind == StepKind::UccFactor) {
      c.append(synth_ucc_factor(s.op, s.angle(theta), conv));
    } else {
      if (plan.control_copy_ancillas.size() < s.controls.size())
        throw std::invalid_argument("compile_plan: not enough control copy ancillas");
      ControlledFactorSpec spec;
      spec.controls = s.controls;
      spec.op = s.op;
      spec.theta = s.angle(theta);
      spec.copy_ancillas.assign(plan.control_copy_ancillas.begin(),
                                plan.control_copy_ancillas.begin() + s.controls.size());
      c.append(lower_all_mcrz(synth_controlled_ucc(spec, conv)));
    }
  }
  return c;
}

namespace {

std::string join_indices(const std::vector<int>& list) {
  if (list.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(list[i]);
  }
  return out;
}

std::vector<int> split_indices(const std::string& text) {
  if (text == "-") return {};
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string piece = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    std::size_t used = 0;
    int value = std::stoi(piece, &used);
    if (used != piece.size() || piece.empty())
      throw std::invalid_argument("parse_plan: bad index list '" + text + "'");
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string format_angle(const Step& s) {
  if (s.free_angle) return "theta";
  if (std::abs(s.fixed_angle - kHalfPi) < 1e-15) return "pi/2";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", s.fixed_angle);
  return buf;
}

}  // namespace

std::string render_plan(const DecompositionPlan& plan) {
  std::string out = "plan rank=" + std::to_string(plan.rank);
  out += " occ=" + join_indices(plan.occupied);
  out += " virt=" + join_indices(plan.virtuals);
  out += " anc=" + join_indices(plan.ancilla_orbitals);
  out += " copy=" + join_indices(plan.control_copy_ancillas);
  out += '\n';
  for (const Step& s : plan.steps) {
    if (s.kind == StepKind::ControlledUccFactor) out += "C{" + join_indices(s.controls) + "} ";
    out += join_indices(s.op.occupied) + " -> " + join_indices(s.op.virtuals);
    out += " @ " + format_angle(s) + '\n';
  }
  return out;
}

DecompositionPlan parse_plan(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("plan ", 0) != 0)
    throw std::invalid_argument("parse_plan: missing 'plan' header line");

  DecompositionPlan plan;
  std::istringstream header(line.substr(5));
  std::string token;
  bool saw_rank = false;
  while (header >> token) {
    std::size_t eq = token.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("parse_plan: malformed header token '" + token + "'");
    std::string key = token.substr(0, eq), value = token.substr(eq + 1);
    if (key == "rank") {
      plan.rank = std::stoi(value);
      saw_rank = true;
    } else if (key == "occ") {
      plan.occupied = split_indices(value);
    } else if (key == "virt") {
      plan.virtuals = split_indices(value);
    } else if (key == "anc") {
      plan.ancilla_orbitals = split_indices(value);
    } else if (key == "copy") {
      plan.control_copy_ancillas = split_indices(value);
    } else {
      throw std::invalid_argument("parse_plan: unknown header key '" + key + "'");
    }
  }
  if (!saw_rank) throw std::invalid_argument("parse_plan: header lacks a rank");

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Step s;
    std::string rest = line;
    if (rest.rfind("C{", 0) == 0) {
      std::size_t close = rest.find('}');
      if (close == std::string::npos)
        throw std::invalid_argument("parse_plan: unterminated control list");
      s.kind = StepKind::ControlledUccFactor;
      s.controls = split_indices(rest.substr(2, close - 2));
      rest = rest.substr(close + 1);
    }
    std::istringstream ls(rest);
    std::string occ_text, arrow, virt_text, at, angle_text;
    if (!(ls >> occ_text >> arrow >> virt_text >> at >> angle_text) || arrow != "->" || at != "@")
      throw std::invalid_argument("parse_plan: malformed step '" + line + "'");
    s.op.occupied = split_indices(occ_text);
    s.op.virtuals = split_indices(virt_text);
    if (angle_text == "theta") {
      s.free_angle = true;
    } else if (angle_text == "pi/2") {
      s.fixed_angle = kHalfPi;
    } else {
      s.fixed_angle = std::stod(angle_text);
    }
    plan.steps.push_back(std::move(s));
  }
  if (plan.steps.empty()) throw std::invalid_argument("parse_plan: no steps");
  return plan;
}

std::vector<std::uint64_t> admissible_support(const DecompositionPlan& plan,
                                              const JwConvention& conv) {
  std::vector<int> physical;
  std::set<int> shelving(plan.ancilla_orbitals.begin(), plan.ancilla_orbitals.end());
  for (int p = 0; p < conv.num_orbitals(); ++p)
    if (!shelving.count(p)) physical.push_back(p);

  std::uint64_t occ_mask = 0, virt_mask = 0;
  for (int p : plan.occupied) occ_mask |= std::uint64_t(1) << conv.qubit_of(p);
  for (int p : plan.virtuals) virt_mask |= std::uint64_t(1) << conv.qubit_of(p);

  std::vector<std::uint64_t> support;
  const std::uint64_t patterns = std::uint64_t(1) << physical.size();
  for (std::uint64_t pattern = 0; pattern < patterns; ++pattern) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < physical.size(); ++i)
      if (pattern & (std::uint64_t(1) << i))
        mask |= std::uint64_t(1) << conv.qubit_of(physical[i]);
    // A determinant occupying every virtual while still holding part of the
    // occupied set has too many electrons for the transition; the central
    // de-excitation fires on it but the correction steps cannot restore it.
    if ((mask & virt_mask) == virt_mask && (mask & occ_mask) != 0) continue;
    support.push_back(mask);
  }
  return support;
}

JwConvention plan_convention(const DecompositionPlan& plan) {
  JwConvention conv;
  conv.total_qubits = plan.min_qubits();
  conv.orbital_to_qubit.resize(plan.orbital_slots());
  std::iota(conv.orbital_to_qubit.begin(), conv.orbital_to_qubit.end(), 0);
  return conv;
}

namespace {

std::uint64_t orbital_mask(const std::vector<int>& orbitals, const JwConvention& conv) {
  std::uint64_t mask = 0;
  for (int p : orbitals) mask |= std::uint64_t(1) << conv.qubit_of(p);
  return mask;
}

// Superposition over the transition pair, several shelved determinants
// (the shelving steps move them out and back), one spectator determinant,
// and the vacuum.
StateVector structured_state(const DecompositionPlan& plan, const JwConvention& conv,
                             std::mt19937_64& rng) {
  std::set<std::uint64_t> masks;
  masks.insert(orbital_mask(plan.occupied, conv));
  masks.insert(orbital_mask(plan.virtuals, conv));

  for (std::size_t step_index = 0; step_index < 2 && step_index < plan.steps.size();
       ++step_index) {
    const Step& s = plan.steps[step_index];
    std::set<int> used(s.op.virtuals.begin(), s.op.virtuals.end());
    std::vector<int> extras;
    for (int p : plan.virtuals)
      if (!used.count(p)) extras.push_back(p);
    std::uint64_t base = orbital_mask(s.op.occupied, conv);
    int added = 0;
    for (std::size_t i = 0; i < extras.size() && added < 3; ++i)
      for (std::size_t j = i + 1; j < extras.size() && added < 3; ++j) {
        masks.insert(base | orbital_mask({extras[i], extras[j]}, conv));
        ++added;
      }
  }

  masks.insert(orbital_mask({plan.occupied[0], plan.virtuals[0]}, conv));
  masks.insert(0);  // vacuum

  std::vector<std::uint64_t> support(masks.begin(), masks.end());
  return random_state_on_support(conv.total_qubits, support, rng);
}

std::uint64_t ancilla_qubit_mask(const DecompositionPlan& plan, const JwConvention& conv) {
  std::uint64_t mask = orbital_mask(plan.ancilla_orbitals, conv);
  for (int q : plan.control_copy_ancillas) mask |= std::uint64_t(1) << q;
  return mask;
}

}  // namespace

SweepResult verify_plan(const DecompositionPlan& plan, const JwConvention& conv,
                        const SweepOptions& opt) {
  conv.validate();
  const auto support = admissible_support(plan, conv);
  const ExcitationOperator target = plan.target();
  const std::uint64_t anc_mask = ancilla_qubit_mask(plan, conv);

  SweepResult result;
  for (int t = 0; t < opt.n_thetas; ++t) {
    auto theta_rng = case_rng(opt.seed, 0x54000000ULL + static_cast<std::uint64_t>(t));
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    const double theta = angle(theta_rng);
    const Circuit circuit = compile_plan(plan, theta, conv);

    for (int s = 0; s < opt.states_per_theta; ++s) {
      auto rng = case_rng(opt.seed, (static_cast<std::uint64_t>(t) << 20) | s);
      StateVector psi = (s == 0 && opt.structured_first_state)
                            ? structured_state(plan, conv, rng)
                            : random_state_on_support(conv.total_qubits, support, rng);

      StateVector out = psi;
      apply_circuit(out, circuit);
      StateVector ref = psi;
      apply_ucc_factor_exact(ref, target, theta, conv);

      result.max_deviation = std::max(result.max_deviation, deviation(out, ref));
      double leaked = 0.0;
      for (std::uint64_t i = 0; i < out.dim(); ++i)
        if (i & anc_mask) leaked += std::norm(out.amps[i]);
      result.max_leakage = std::max(result.max_leakage, leaked);
      ++result.cases;
    }
  }
  return result;
}

std::vector<OrderingReport> verify_orderings(const DecompositionPlan& plan, int n_orderings,
                                             const SweepOptions& opt) {
  const int slots = plan.orbital_slots();
  std::vector<OrderingReport> reports;
  for (int i = 0; i < n_orderings; ++i) {
    JwConvention conv = plan_convention(plan);
    if (i > 0) {  // first ordering is the identity baseline
      auto rng = case_rng(opt.seed, 0x0BD0000000ULL + static_cast<std::uint64_t>(i));
      std::shuffle(conv.orbital_to_qubit.begin(), conv.orbital_to_qubit.end(), rng);
    }

    SweepResult sweep = verify_plan(plan, conv, opt);
    OrderingReport report;
    report.orbital_to_qubit.assign(conv.orbital_to_qubit.begin(),
                                   conv.orbital_to_qubit.begin() + slots);
    report.max_deviation = sweep.max_deviation;
    report.passed = sweep.max_deviation < 1e-9 && sweep.max_leakage < 1e-10;
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace uccsynth
