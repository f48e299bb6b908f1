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

#include "uccsynth/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace uccsynth {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

StateVector::StateVector(int n) : n_qubits(n) {
  if (n <= 0 || n > kMaxSimQubits)
    throw std::invalid_argument("StateVector: register size outside the dense simulation cap");
  amps.assign(std::uint64_t(1) << n, cdouble(0.0, 0.0));
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dim()) throw std::invalid_argument("basis_state: index out of range");
  s.amps[index] = 1.0;
  return s;
}

double StateVector::norm() const {
  double total = 0.0;
  for (const auto& a : amps) total += std::norm(a);
  return std::sqrt(total);
}

void StateVector::normalize() {
  double n = norm();
  if (n == 0.0) throw std::domain_error("StateVector: cannot normalize the zero vector");
  for (auto& a : amps) a /= n;
}

void apply_gate(StateVector& state, const Gate& g) {
  const std::uint64_t dim = state.dim();
  const std::uint64_t tbit = std::uint64_t(1) << g.target;
  if (tbit >= dim) throw std::invalid_argument("apply_gate: target outside the register");
  cdouble* amps = state.amps.data();

  switch (g.kind) {
    case GateKind::H: {
      const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
      for (std::uint64_t base = 0; base < dim; base += tbit << 1) {
        for (std::uint64_t i = base; i < base + tbit; ++i) {
          cdouble lo = amps[i], hi = amps[i + tbit];
          amps[i] = (lo + hi) * inv_sqrt2;
          amps[i + tbit] = (lo - hi) * inv_sqrt2;
        }
      }
      break;
    }
    case GateKind::X: {
      for (std::uint64_t base = 0; base < dim; base += tbit << 1)
        for (std::uint64_t i = base; i < base + tbit; ++i) std::swap(amps[i], amps[i + tbit]);
      break;
    }
    case GateKind::RX: {
      const cdouble c(std::cos(g.angle / 2), 0.0);
      const cdouble s(0.0, -std::sin(g.angle / 2));
      for (std::uint64_t base = 0; base < dim; base += tbit << 1) {
        for (std::uint64_t i = base; i < base + tbit; ++i) {
          cdouble lo = amps[i], hi = amps[i + tbit];
          amps[i] = c * lo + s * hi;
          amps[i + tbit] = s * lo + c * hi;
        }
      }
      break;
    }
    case GateKind::RZ: {
      const cdouble lo = std::exp(cdouble(0.0, -g.angle / 2));
      const cdouble hi = std::exp(cdouble(0.0, g.angle / 2));
      for (std::uint64_t base = 0; base < dim; base += tbit << 1) {
        for (std::uint64_t i = base; i < base + tbit; ++i) {
          amps[i] *= lo;
          amps[i + tbit] *= hi;
        }
      }
      break;
    }
    case GateKind::CNOT: {
      const std::uint64_t cbit = std::uint64_t(1) << g.control;
      if (cbit >= dim) throw std::invalid_argument("apply_gate: control outside the register");
      for (std::uint64_t base = 0; base < dim; base += tbit << 1)
        for (std::uint64_t i = base; i < base + tbit; ++i)
          if (i & cbit) std::swap(amps[i], amps[i + tbit]);
      break;
    }
    case GateKind::MCRZ: {
      std::uint64_t cmask = 0;
      for (int q : g.controls) {
        std::uint64_t bit = std::uint64_t(1) << q;
        if (bit >= dim) throw std::invalid_argument("apply_gate: control outside the register");
        cmask |= bit;
      }
      const cdouble lo = std::exp(cdouble(0.0, -g.angle / 2));
      const cdouble hi = std::exp(cdouble(0.0, g.angle / 2));
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & cmask) == cmask) amps[i] *= (i & tbit) ? hi : lo;
      }
      break;
    }
  }
}

void apply_circuit(StateVector& state, const Circuit& c) {
  if ((std::uint64_t(1) << c.n_qubits) != state.dim())
    throw std::invalid_argument("apply_circuit: register size mismatch");
  for (const auto& g : c.gates) apply_gate(state, g);
}

namespace {

struct LadderStep {
  std::uint64_t bit;    // qubit occupied/emptied
  std::uint64_t above;  // Z-chain qubits (strictly higher index)
  bool create;
};

std::vector<LadderStep> ladder_steps(const ExcitationOperator& op, const JwConvention& conv) {
  std::vector<LadderStep> steps;
  steps.reserve(2 * op.rank());
  auto make = [&](int orbital, bool create) {
    int q = conv.qubit_of(orbital);
    LadderStep s;
    s.bit = std::uint64_t(1) << q;
    std::uint64_t all = (conv.total_qubits == 64) ? ~std::uint64_t(0)
                                                  : ((std::uint64_t(1) << conv.total_qubits) - 1);
    s.above = all & ~((s.bit << 1) - 1);
    s.create = create;
    return s;
  };
  for (int p : op.occupied) steps.push_back(make(p, false));
  for (auto it = op.virtuals.rbegin(); it != op.virtuals.rend(); ++it)
    steps.push_back(make(*it, true));
  return steps;
}

// Walks |det> through the ladder sequence; returns false when any step
// annihilates the state, otherwise leaves the image and accumulated sign.
bool walk_ladders(const std::vector<LadderStep>& steps, std::uint64_t det,
                  std::uint64_t& image, int& sign) {
  std::uint64_t m = det;
  int s = 1;
  for (const auto& step : steps) {
    if (step.create ? (m & step.bit) : !(m & step.bit)) return false;
    if (std::popcount(m & step.above) % 2) s = -s;
    m ^= step.bit;
  }
  image = m;
  sign = s;
  return true;
}

}  // namespace

void apply_ucc_factor_exact(StateVector& state, const ExcitationOperator& op,
                            double theta, const JwConvention& conv) {
  op.validate();
  conv.validate();
  if ((std::uint64_t(1) << conv.total_qubits) != state.dim())
    throw std::invalid_argument("apply_ucc_factor_exact: register size mismatch");

  std::uint64_t occ_mask = 0, virt_mask = 0;
  for (int p : op.occupied) occ_mask |= std::uint64_t(1) << conv.qubit_of(p);
  for (int p : op.virtuals) virt_mask |= std::uint64_t(1) << conv.qubit_of(p);

  const auto steps = ladder_steps(op, conv);
  const double c = std::cos(theta), s = std::sin(theta);
  cdouble* amps = state.amps.data();
  const std::uint64_t dim = state.dim();

  // Each excitable determinant pairs with exactly one de-excitable image;
  // visiting only excitable ones touches every coupled pair once.
  for (std::uint64_t d = 0; d < dim; ++d) {
    if ((d & occ_mask) != occ_mask || (d & virt_mask) != 0) continue;
    std::uint64_t image;
    int sign;
    if (!walk_ladders(steps, d, image, sign)) continue;  // cannot happen, kept for safety
    cdouble lo = amps[d];
    cdouble hi = amps[image];
    amps[d] = c * lo - double(sign) * s * hi;
    amps[image] = double(sign) * s * lo + c * hi;
  }
}

Eigen::MatrixXcd generator_matrix(const ExcitationOperator& op, const JwConvention& conv,
                                  int oracle_cap) {
  return jw_generator(op, conv).to_matrix(conv.total_qubits, oracle_cap);
}

Eigen::MatrixXcd matrix_exponential_oracle(const ExcitationOperator& op, double theta,
                                           const JwConvention& conv, int oracle_cap) {
  Eigen::MatrixXcd g = generator_matrix(op, conv, oracle_cap);
  // i * g is Hermitian, so exp(theta g) = V exp(-i theta Lambda) V^dag.
  Eigen::MatrixXcd h = cdouble(0.0, 1.0) * g;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h);
  if (eig.info() != Eigen::Success)
    throw std::runtime_error("matrix_exponential_oracle: eigendecomposition failed");
  Eigen::VectorXcd phases = (cdouble(0.0, -theta) * eig.eigenvalues().cast<cdouble>().array()).exp();
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

namespace {

struct MaskedTerm {
  std::uint64_t flip;
  std::uint64_t phase;
  cdouble coeff;  // includes the i^{#Y} factor
};

std::vector<MaskedTerm> masked_terms(const PauliSum& sum) {
  std::vector<MaskedTerm> out;
  out.reserve(sum.size());
  for (const auto& t : sum.terms()) {
    MaskedTerm m{0, 0, t.coeff};
    int n_y = 0;
    for (const auto& [q, axis] : t.axes) {
      if (axis != PauliAxis::Z) m.flip |= std::uint64_t(1) << q;
      if (axis != PauliAxis::X) m.phase |= std::uint64_t(1) << q;
      if (axis == PauliAxis::Y) ++n_y;
    }
    for (int i = 0; i < n_y % 4; ++i) m.coeff *= cdouble(0.0, 1.0);
    out.push_back(m);
  }
  return out;
}

void apply_masked_sum(const std::vector<MaskedTerm>& terms, const std::vector<cdouble>& in,
                      std::vector<cdouble>& out) {
  std::fill(out.begin(), out.end(), cdouble(0.0, 0.0));
  const std::uint64_t dim = in.size();
  for (const auto& t : terms) {
    for (std::uint64_t b = 0; b < dim; ++b) {
      double sign = (std::popcount(b & t.phase) % 2 == 0) ? 1.0 : -1.0;
      out[b ^ t.flip] += t.coeff * sign * in[b];
    }
  }
}

}  // namespace

void apply_generator_exponential(StateVector& state, const ExcitationOperator& op,
                                 double theta, const JwConvention& conv) {
  if ((std::uint64_t(1) << conv.total_qubits) != state.dim())
    throw std::invalid_argument("apply_generator_exponential: register size mismatch");
  const auto terms = masked_terms(jw_generator(op, conv));

  // The generator's Pauli coefficients sum to 1 in magnitude, so scaling
  // theta below 1/2 keeps the Taylor series short and well conditioned.
  int scale_steps = std::max(1, static_cast<int>(std::ceil(std::abs(theta) / 0.5)));
  const double step = theta / scale_steps;

  std::vector<cdouble> term_vec = state.amps;
  std::vector<cdouble> scratch(state.dim());
  for (int s = 0; s < scale_steps; ++s) {
    term_vec = state.amps;
    double max_mag = 1.0;
    for (int k = 1; k <= 64 && max_mag > 1e-18; ++k) {
      apply_masked_sum(terms, term_vec, scratch);
      const double factor = step / k;
      max_mag = 0.0;
      for (std::uint64_t i = 0; i < state.dim(); ++i) {
        term_vec[i] = factor * scratch[i];
        state.amps[i] += term_vec[i];
        max_mag = std::max(max_mag, std::abs(term_vec[i]));
      }
    }
  }
}

double deviation(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("deviation: register size mismatch");
  double max_diff = 0.0;
  for (std::uint64_t i = 0; i < a.dim(); ++i)
    max_diff = std::max(max_diff, std::abs(a.amps[i] - b.amps[i]));
  return max_diff;
}

SectorRestriction sector_restrict(const StateVector& state, const std::vector<int>& zero_qubits) {
  std::uint64_t zero_mask = 0;
  for (int q : zero_qubits) {
    if (q < 0 || q >= state.n_qubits)
      throw std::invalid_argument("sector_restrict: qubit out of range");
    zero_mask |= std::uint64_t(1) << q;
  }
  int kept = state.n_qubits - std::popcount(zero_mask);
  if (kept == 0) throw std::invalid_argument("sector_restrict: nothing left to keep");

  SectorRestriction out{StateVector(kept), 0.0};
  for (std::uint64_t i = 0; i < state.dim(); ++i) {
    if (i & zero_mask) {
      out.leaked_weight += std::norm(state.amps[i]);
      continue;
    }
    std::uint64_t compact = 0;
    int pos = 0;
    for (int q = 0; q < state.n_qubits; ++q) {
      if (zero_mask & (std::uint64_t(1) << q)) continue;
      if (i & (std::uint64_t(1) << q)) compact |= std::uint64_t(1) << pos;
      ++pos;
    }
    out.reduced.amps[compact] = state.amps[i];
  }
  if (out.leaked_weight < 1.0 && out.reduced.norm() > 0.0) out.reduced.normalize();
  return out;
}

std::string dump_state(const StateVector& state, double threshold) {
  std::string out;
  char buf[96];
  for (std::uint64_t i = 0; i < state.dim(); ++i) {
    if (std::abs(state.amps[i]) <= threshold) continue;
    std::string bits(state.n_qubits, '0');
    for (int q = 0; q < state.n_qubits; ++q)
      if (i & (std::uint64_t(1) << q)) bits[q] = '1';
    std::snprintf(buf, sizeof(buf), " %.17g %.17g\n", state.amps[i].real(),
                  state.amps[i].imag());
    out += bits + buf;
  }
  return out;
}

StateVector parse_state(const std::string& text, int n_qubits) {
  StateVector state(n_qubits);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string bits;
    double re, im;
    if (!(ls >> bits >> re >> im) || static_cast<int>(bits.size()) != n_qubits)
      throw std::invalid_argument("parse_state: malformed line '" + line + "'");
    std::uint64_t index = 0;
    for (int q = 0; q < n_qubits; ++q) {
      if (bits[q] == '1')
        index |= std::uint64_t(1) << q;
      else if (bits[q] != '0')
        throw std::invalid_argument("parse_state: bitstring must be 0/1");
    }
    state.amps[index] = cdouble(re, im);
  }
  return state;
}

std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t case_id) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(case_id)));
}

StateVector random_state(int n_qubits, std::mt19937_64& rng) {
  StateVector s(n_qubits);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (auto& a : s.amps) a = cdouble(normal(rng), normal(rng));
  s.normalize();
  return s;
}

StateVector random_state_on_support(int n_qubits, const std::vector<std::uint64_t>& support,
                                    std::mt19937_64& rng) {
  if (support.empty()) throw std::invalid_argument("random_state_on_support: empty support");
  StateVector s(n_qubits);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (std::uint64_t index : support) {
    if (index >= s.dim()) throw std::invalid_argument("random_state_on_support: index out of range");
    s.amps[index] = cdouble(normal(rng), normal(rng));
  }
  s.normalize();
  return s;
}

}  // namespace uccsynth
