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
#include <iosfwd>
#include <string>
#include <vector>

namespace uccsynth {

// Shared exit-code contract of every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitSemanticError = 3;
inline constexpr int kExitResourceCap = 4;

/// Overrides the register-size cap used by the oracle cross-checks in
/// cmd_verify; read from the UCCSYNTH_ORACLE_CAP environment variable.
int oracle_cap_from_env();

struct SynthArgs {
  std::string op_spec;
  double theta = 0.0;
  int orbitals = 0;
  std::string out_path;  // empty: print the circuit instead
};

struct DecomposeArgs {
  std::string scheme;
  std::string op_spec;
  double theta = 0.0;
  int orbitals = 0;
  std::string out_path;  // empty: skip the compiled-circuit export
};

struct VerifyArgs {
  std::string what;     // scheme name, "naive-quad", "uncontrolled-quad", or "factor"
  std::string op_spec;  // used by "factor" only
  int orbitals = 0;     // used by "factor" only
  int trials = 20;
  std::uint64_t seed = 1;
  bool orderings = false;
  int n_orderings = 8;
};

struct SweepArgs {
  std::vector<int> ranks;
  int m_lo = 0;
  int m_hi = -1;         // empty range by default
  std::string out_path;  // empty: print the CSV
};

int cmd_synth(const SynthArgs& args, std::ostream& out, std::ostream& err);
int cmd_decompose(const DecomposeArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err);

}  // namespace uccsynth
