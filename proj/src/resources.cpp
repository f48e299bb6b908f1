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

#include "uccsynth/resources.hpp"

#include <numeric>
#include <stdexcept>

#include "uccsynth/controlled.hpp"

namespace uccsynth {

int scheme_rank(SchemeId scheme) {
  switch (scheme) {
    case SchemeId::Triple: return 3;
    case SchemeId::Quadruple: return 4;
    case SchemeId::Quintuple: return 5;
    case SchemeId::Sextuple24:
    case SchemeId::Sextuple33: return 6;
  }
  throw std::invalid_argument("scheme_rank: unknown scheme");
}

const char* scheme_name(SchemeId scheme) {
  switch (scheme) {
    case SchemeId::Triple: return "triple";
    case SchemeId::Quadruple: return "quadruple";
    case SchemeId::Quintuple: return "quintuple";
    case SchemeId::Sextuple24: return "sextuple-24";
    case SchemeId::Sextuple33: return "sextuple-33";
  }
  throw std::invalid_argument("scheme_name: unknown scheme");
}

std::optional<SchemeId> parse_scheme(std::string_view name) {
  if (name == "triple") return SchemeId::Triple;
  if (name == "quadruple" || name == "quad") return SchemeId::Quadruple;
  if (name == "quintuple" || name == "quint") return SchemeId::Quintuple;
  if (name == "sextuple-24" || name == "sext24") return SchemeId::Sextuple24;
  if (name == "sextuple-33" || name == "sext33") return SchemeId::Sextuple33;
  return std::nullopt;
}

DecompositionPlan plan_for_scheme(SchemeId scheme, int orbitals) {
  const int n = scheme_rank(scheme);
  if (orbitals < 2 * n)
    throw std::invalid_argument("plan_for_scheme: too few orbitals for the excitation");
  std::vector<int> occ(n), virt(n);
  std::iota(occ.begin(), occ.end(), 0);
  std::iota(virt.begin(), virt.end(), n);
  const std::vector<int> anc = {orbitals, orbitals + 1};
  switch (scheme) {
    case SchemeId::Triple: return plan_triple(occ, virt, anc);
    case SchemeId::Quadruple: return plan_quadruple(occ, virt, anc);
    case SchemeId::Quintuple: return plan_quintuple(occ, virt, anc);
    case SchemeId::Sextuple24: return plan_sextuple_24(occ, virt, anc);
    case SchemeId::Sextuple33: return plan_sextuple_33(occ, virt, anc);
  }
  throw std::invalid_argument("plan_for_scheme: unknown scheme");
}

GateCounts traditional_counts(int rank, int orbitals) {
  if (rank < 1) throw std::invalid_argument("traditional_counts: rank must be positive");
  if (orbitals < 2 * rank)
    throw std::invalid_argument("traditional_counts: too few orbitals for the excitation");
  const long long words = 1LL << (2 * rank - 1);
  GateCounts counts;
  counts.cnot = 2 * words * (orbitals - 1);
  counts.single_qubit_rotation = words;
  counts.single_qubit_clifford = 4LL * rank * words;
  return counts;
}

namespace {

// Worst-case tally over the plan's steps with every cascade charged at the
// full slot count. The lowering of the controlled rotations is charged at
// twice the word count, one unit per cascade half; the control copy CNOTs
// ride along free. This is the envelope the crossover analysis uses.
GateCounts tally_plan(const DecompositionPlan& plan, long long slots) {
  GateCounts counts;
  for (const Step& s : plan.steps) {
    const int n = s.op.rank();
    const long long words = 1LL << (2 * n - 1);
    counts.cnot += 2 * words * (slots - 1);
    counts.single_qubit_clifford += 4LL * n * words;
    if (s.controls.empty()) {
      counts.single_qubit_rotation += words;
    } else {
      const int k = static_cast<int>(s.controls.size());
      counts.cnot += 2 * words * mcrz_cnot_cost(k);
      counts.single_qubit_rotation += words * mcrz_rotation_cost(k);
    }
  }
  return counts;
}

}  // namespace

GateCounts decomposed_counts(SchemeId scheme, int orbitals) {
  const DecompositionPlan plan = plan_for_scheme(scheme, orbitals);
  return tally_plan(plan, plan.orbital_slots());  // M + 2 slots with the shelving orbitals
}

CrossoverResult crossover(SchemeId scheme, int m_max) {
  const int rank = scheme_rank(scheme);
  // Both counts are affine in M, so extend them below the physical minimum
  // of 2*rank orbitals and compare as formulas from M = 1 on.
  const DecompositionPlan shape = plan_for_scheme(scheme, 2 * rank);
  const long long words = 1LL << (2 * rank);
  int first = 0;
  bool everywhere = true;
  for (int m = 1; m <= m_max; ++m) {
    const bool better = tally_plan(shape, m + 2).cnot < words * (m - 1);
    if (better && first == 0) first = m;
    if (!better) everywhere = false;
  }
  if (first == 0) return {CrossoverKind::Never, 0};
  if (everywhere) return {CrossoverKind::Always, 0};
  return {CrossoverKind::At, first};
}

CrossoverResult crossover_for_rank(int rank, int m_max) {
  switch (rank) {
    case 3: return crossover(SchemeId::Triple, m_max);
    case 4: return crossover(SchemeId::Quadruple, m_max);
    case 5: return crossover(SchemeId::Quintuple, m_max);
    case 6: return crossover(SchemeId::Sextuple33, m_max);
    default: return {CrossoverKind::Never, 0};
  }
}

std::string emit_sweep_csv(const std::vector<SchemeId>& schemes, int m_lo, int m_hi) {
  std::string csv =
      "rank,M,scheme,cnot_traditional,cnot_decomposed,rotations_traditional,"
      "rotations_decomposed,cliffords_traditional,cliffords_decomposed\n";
  for (SchemeId scheme : schemes) {
    const int rank = scheme_rank(scheme);
    for (int m = std::max(m_lo, 2 * rank); m <= m_hi; ++m) {
      const GateCounts trad = traditional_counts(rank, m);
      const GateCounts dec = decomposed_counts(scheme, m);
      csv += std::to_string(rank) + ',' + std::to_string(m) + ',' + scheme_name(scheme);
      for (long long v : {trad.cnot, dec.cnot, trad.single_qubit_rotation,
                          dec.single_qubit_rotation, trad.single_qubit_clifford,
                          dec.single_qubit_clifford})
        csv += ',' + std::to_string(v);
      csv += '\n';
    }
  }
  return csv;
}

}  // namespace uccsynth
