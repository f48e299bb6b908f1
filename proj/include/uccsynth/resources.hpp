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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uccsynth/circuit.hpp"
#include "uccsynth/schemes.hpp"

namespace uccsynth {

enum class SchemeId : std::uint8_t { Triple, Quadruple, Quintuple, Sextuple24, Sextuple33 };

int scheme_rank(SchemeId scheme);
const char* scheme_name(SchemeId scheme);  // "triple", ..., "sextuple-24"
std::optional<SchemeId> parse_scheme(std::string_view name);

/// The scheme's plan at M physical orbitals: occupied block [0, n), virtual
/// block [n, 2n), shelving orbitals at M and M+1.
DecompositionPlan plan_for_scheme(SchemeId scheme, int orbitals);

/// Worst-case counts for one rank-N factor on M orbitals, every cascade
/// spanning the whole register: 2^{2N}(M-1) CNOTs, 2^{2N-1} rotations,
/// 4N 2^{2N-1} basis-change Cliffords.
GateCounts traditional_counts(int rank, int orbitals);

/// Worst-case accounting for the scheme's compiled plan at M physical
/// orbitals. Every step is charged like a traditional factor over all
/// M + 2 orbital slots, and the controlled step additionally pays the
/// rotation-lowering CNOTs at 2^{2n} multiplicity. The quadruple's CNOT
/// column lands exactly on 80M + 208.
GateCounts decomposed_counts(SchemeId scheme, int orbitals);

enum class CrossoverKind : std::uint8_t { At, Always, Never };

struct CrossoverResult {
  CrossoverKind kind = CrossoverKind::Never;
  int orbitals = 0;  // meaningful only for kind == At
};

/// Smallest M (up to m_max) where the decomposed scheme beats the
/// traditional factor's CNOT count.
CrossoverResult crossover(SchemeId scheme, int m_max = 4096);

/// Ranks 1 and 2 have no decomposition and report Never; rank 6 uses the
/// cheaper 3-3 split.
CrossoverResult crossover_for_rank(int rank, int m_max = 4096);

/// One row per (scheme, M): traditional vs decomposed counts, deterministic
/// order, suitable for regenerating the comparison curves.
std::string emit_sweep_csv(const std::vector<SchemeId>& schemes, int m_lo, int m_hi);

}  // namespace uccsynth
