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

#include <exception>
#include <iostream>

#include "CLI11.hpp"

#include "uccsynth/cli_commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Circuit synthesis for factorized unitary coupled-cluster operators"};
  app.require_subcommand(1);

  uccsynth::SynthArgs synth;
  CLI::App* synth_cmd =
      app.add_subcommand("synth", "Synthesize exp(theta (A - A^dag)) for one excitation factor");
  synth_cmd->add_option("op", synth.op_spec, "Excitation operator, e.g. A[0,1->2,3]")->required();
  synth_cmd->add_option("--theta", synth.theta, "Rotation parameter");
  synth_cmd->add_option("--orbitals", synth.orbitals,
                        "Register size (default: smallest fitting the operator)");
  synth_cmd->add_option("--out", synth.out_path, "Write the circuit text here instead of stdout");

  uccsynth::DecomposeArgs dec;
  CLI::App* dec_cmd =
      app.add_subcommand("decompose", "Rebuild a high-rank factor from ancilla-assisted steps");
  dec_cmd->add_option("scheme", dec.scheme, "triple, quad, quint, sext24, or sext33")->required();
  dec_cmd->add_option("op", dec.op_spec, "Excitation operator (default: canonical for the rank)");
  dec_cmd->add_option("--theta", dec.theta, "Rotation parameter");
  dec_cmd->add_option("--orbitals", dec.orbitals, "Physical orbital count");
  dec_cmd->add_option("--out", dec.out_path, "Write the compiled circuit text here");

  uccsynth::VerifyArgs ver;
  CLI::App* ver_cmd =
      app.add_subcommand("verify", "Drive a scheme or factor against the exact reference");
  ver_cmd
      ->add_option("target", ver.what,
                   "triple, quad, quint, sext24, sext33, naive-quad, uncontrolled-quad, or factor")
      ->required();
  ver_cmd->add_option("--op", ver.op_spec, "Excitation operator for the factor target");
  ver_cmd->add_option("--orbitals", ver.orbitals, "Register size for the factor target");
  ver_cmd->add_option("--trials", ver.trials, "Random cases to run");
  ver_cmd->add_option("--seed", ver.seed, "Base seed for the deterministic case streams");
  CLI::Option* orderings_opt = ver_cmd->add_option(
      "--orderings", ver.n_orderings, "Also re-verify under this many random orbital orderings");

  uccsynth::SweepArgs sweep;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Emit the decomposed-vs-traditional gate count table as CSV");
  sweep_cmd->add_option("--ranks", sweep.ranks, "Excitation ranks to include (default: 3,4,5,6)")
      ->delimiter(',');
  sweep_cmd->add_option("--min", sweep.m_lo, "Smallest orbital count");
  sweep_cmd->add_option("--max", sweep.m_hi, "Largest orbital count");
  sweep_cmd->add_option("--out", sweep.out_path, "Write the CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? uccsynth::kExitOk : uccsynth::kExitParseError;
  }

  try {
    if (*synth_cmd) return uccsynth::cmd_synth(synth, std::cout, std::cerr);
    if (*dec_cmd) return uccsynth::cmd_decompose(dec, std::cout, std::cerr);
    if (*ver_cmd) {
      ver.orderings = orderings_opt->count() > 0;
      return uccsynth::cmd_verify(ver, std::cout, std::cerr);
    }
    if (*sweep_cmd) {
      if (sweep.ranks.empty()) sweep.ranks = {3, 4, 5, 6};
      if (sweep_cmd->count("--min") == 0) sweep.m_lo = 8;
      if (sweep_cmd->count("--max") == 0) sweep.m_hi = 64;
      return uccsynth::cmd_sweep(sweep, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return uccsynth::kExitSemanticError;
  }
  return uccsynth::kExitParseError;
}
