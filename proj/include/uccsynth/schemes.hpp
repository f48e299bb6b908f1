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

#include "uccsynth/circuit.hpp"
#include "uccsynth/fermion.hpp"

namespace uccsynth {

enum class StepKind : std::uint8_t { UccFactor, ControlledUccFactor };

/// One factor application inside a decomposition plan. The pre- and
/// post-rotation steps carry a fixed pi/2 angle; the central step carries
/// the plan's free parameter.
struct Step {
  StepKind kind = StepKind::UccFactor;
  std::vector<int> controls;  // orbital indices, empty unless controlled
  ExcitationOperator op;
  bool free_angle = false;
  double fixed_angle = 0.0;

  double angle(double theta) const { return free_angle ? theta : fixed_angle; }
};

/// A rank-n factor rebuilt from lower-rank factors: shelve parts of the
/// excitation onto ancilla orbitals, rotate the remainder under control of
/// the already-moved virtuals, then undo the shelving. The two failure
/// exhibits reuse the same container with different step lists.
struct DecompositionPlan {
  int rank = 0;
  std::vector<int> occupied;                // physical occupied orbitals
  std::vector<int> virtuals;                // physical virtual orbitals
  std::vector<int> ancilla_orbitals;        // shelving orbitals, |0> in and out
  std::vector<int> control_copy_ancillas;   // raw qubit indices for control copies
  std::vector<Step> steps;

  /// The rank-n excitation the plan implements.
  ExcitationOperator target() const { return {occupied, virtuals}; }

  /// Orbital slots the plan addresses (max orbital index + 1).
  int orbital_slots() const;
  /// Smallest register that fits orbitals and copy ancillas under the
  /// identity mapping.
  int min_qubits() const;
};

DecompositionPlan plan_triple(const std::vector<int>& occ, const std::vector<int>& virt,
                              const std::vector<int>& anc);
DecompositionPlan plan_quadruple(const std::vector<int>& occ, const std::vector<int>& virt,
                                 const std::vector<int>& anc);
DecompositionPlan plan_quintuple(const std::vector<int>& occ, const std::vector<int>& virt,
                                 const std::vector<int>& anc);
DecompositionPlan plan_sextuple_24(const std::vector<int>& occ, const std::vector<int>& virt,
                                   const std::vector<int>& anc);
DecompositionPlan plan_sextuple_33(const std::vector<int>& occ, const std::vector<int>& virt,
                                   const std::vector<int>& anc);

/// Failure exhibit: two independent doubles at the free angle, no ancillas.
/// Produces cross terms instead of the rank-4 rotation.
DecompositionPlan plan_naive_two_doubles(const std::vector<int>& occ,
                                         const std::vector<int>& virt);

/// Failure exhibit: the quadruple plan with the controls dropped from the
/// central step. Correct on the main pair, leaks onto the ancilla orbitals
/// for partially excited inputs.
DecompositionPlan plan_uncontrolled(const std::vector<int>& occ, const std::vector<int>& virt,
                                    const std::vector<int>& anc);

/// Concatenates the step circuits in order, with every multi-controlled
/// rotation lowered to CNOTs and single-qubit rotations.
Circuit compile_plan(const DecompositionPlan& plan, double theta, const JwConvention& conv);

/// One header line, then one line per step ("0,1 -> 4,8 @ pi/2",
/// "C{4,6} 8,9 -> 5,7 @ theta"). parse_plan inverts render_plan exactly.
std::string render_plan(const DecompositionPlan& plan);
DecompositionPlan parse_plan(const std::string& text);

/// Basis masks (over the conv register, ancillas clear) on which the plan is
/// certified: everything except determinants that occupy every virtual
/// orbital while overlapping the occupied set. Those carry more electrons
/// than any rank-n transition can involve, and the schemes move them onto
/// the ancilla orbitals.
std::vector<std::uint64_t> admissible_support(const DecompositionPlan& plan,
                                              const JwConvention& conv);

struct SweepOptions {
  int n_thetas = 10;
  int states_per_theta = 5;
  std::uint64_t seed = 1;
  /// When set, the first state of every theta is a structured superposition
  /// over the target pair plus several shelved and untouched determinants.
  bool structured_first_state = true;
};

struct SweepResult {
  int cases = 0;
  double max_deviation = 0.0;  // vs. the exact factor, full register
  double max_leakage = 0.0;    // probability left outside the ancillas-|0> sector
};

/// Drives the compiled plan against apply_ucc_factor_exact over random
/// admissible states and random angles.
SweepResult verify_plan(const DecompositionPlan& plan, const JwConvention& conv,
                        const SweepOptions& opt);

/// Convention with the plan's orbital slots mapped identically and the copy
/// ancillas sitting above them.
JwConvention plan_convention(const DecompositionPlan& plan);

struct OrderingReport {
  std::vector<int> orbital_to_qubit;
  double max_deviation = 0.0;
  bool passed = false;
};

/// Repeats a reduced exactness sweep under random orbital-to-qubit
/// interleavings (copy ancillas stay put). Reports one row per ordering.
std::vector<OrderingReport> verify_orderings(const DecompositionPlan& plan, int n_orderings,
                                             const SweepOptions& opt);

}  // namespace uccsynth
