// Copyright 2026 The ghzbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Text rendering of states and the regenerated protocol tables. States are
// printed as signed ket lists; receiver states are printed symbolically in
// the input amplitudes (alpha, beta for one qubit; alpha, gamma, mu, beta
// for two; a0, a1, ... beyond that).

#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "ghzbell/bases.hpp"
#include "ghzbell/measurement.hpp"
#include "ghzbell/qis.hpp"
#include "ghzbell/superdense.hpp"
#include "ghzbell/teleport.hpp"

namespace ghzbell {

struct TableRow {
  std::vector<std::string> cells;
  /// Labelled states backing the row, for machine-readable output.
  std::vector<std::pair<std::string, StateVector>> states;
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<TableRow> rows;
};

// ---------------------------------------------------------------------------
// Ket lists
// ---------------------------------------------------------------------------

namespace detail {

inline constexpr double kPrintTol = 1e-9;

inline std::string signed_term(double c, const std::string& body, bool first) {
  if (std::abs(std::abs(c) - 1.0) > kPrintTol) {
    throw std::domain_error("coefficient " + std::to_string(c) +
                            " is not +-1 after scaling");
  }
  if (c < 0) return "-" + body;
  return first ? body : "+" + body;
}

inline Complex first_nonzero(const StateVector& s) {
  for (Index i = 0; i < s.dimension(); ++i) {
    if (std::abs(s[i]) > kPrintTol) return s[i];
  }
  throw std::domain_error("cannot format the zero vector");
}

/// Real coefficient after dividing by `ref`; throws if not real.
inline double real_ratio(Complex a, Complex ref) {
  const Complex r = a / ref;
  if (std::abs(r.imag()) > kPrintTol) {
    throw std::domain_error("complex relative phase has no table form");
  }
  return r.real();
}

}  // namespace detail

/// "|00>+|11>": every nonzero amplitude divided by `ref` must be +-1.
inline std::string format_kets(const StateVector& s, Complex ref) {
  std::string out;
  for (Index i = 0; i < s.dimension(); ++i) {
    if (std::abs(s[i]) <= detail::kPrintTol) continue;
    out += detail::signed_term(detail::real_ratio(s[i], ref),
                               "|" + ket_label(i, s.num_qubits()) + ">",
                               out.empty());
  }
  return out;
}

/// Equal-weight superposition with the overall phase of its first ket
/// removed, e.g. "|01>-|10>".
inline std::string format_unnormalized(const StateVector& s) {
  return format_kets(s, detail::first_nonzero(s));
}

/// "1/2(|000>+...)" with the global phase fixed so the first ket is
/// positive; amplitudes must have magnitude 1/2.
inline std::string format_half(const StateVector& s) {
  const Complex first = detail::first_nonzero(s);
  if (std::abs(std::abs(first) - 0.5) > detail::kPrintTol) {
    throw std::domain_error("amplitudes are not +-1/2");
  }
  return "1/2(" + format_kets(s, first / std::abs(first) * 0.5) + ")";
}

/// Equal-weight superposition of K kets with a normalization prefix:
/// "1/2(...)" for K = 4, otherwise "1/sqrt(K)(...)".
inline std::string format_uniform(const StateVector& s) {
  const Complex first = detail::first_nonzero(s);
  const double k = std::round(1.0 / std::norm(first));
  if (k == 4.0) return format_half(s);
  const double m = std::abs(first);
  if (std::abs(m - 1.0 / std::sqrt(k)) > detail::kPrintTol) {
    throw std::domain_error("amplitude is not 1/sqrt of an integer");
  }
  return "1/sqrt(" + std::to_string(static_cast<long>(k)) + ")(" +
         format_kets(s, first / m * (1.0 / std::sqrt(k))) + ")";
}

inline std::vector<std::string> amplitude_symbols(int input_qubits) {
  if (input_qubits == 1) return {"alpha", "beta"};
  if (input_qubits == 2) return {"alpha", "gamma", "mu", "beta"};
  std::vector<std::string> out;
  for (Index i = 0; i < (Index{1} << input_qubits); ++i) {
    out.push_back("a" + std::to_string(i));
  }
  return out;
}

/// Receiver state as a linear form in the input amplitudes. `images[i]` is
/// the (unnormalized) receiver state for input basis vector i; all images
/// share one reference phase, taken from the first nonzero amplitude, so the
/// leading symbol is always positive.
/// Terms are grouped per symbol with the group's leading sign factored out:
/// alpha(|1100>+|1111>)-beta(|0000>+|0011>).
inline std::string format_symbolic(const std::vector<StateVector>& images) {
  int input_qubits = 0;
  while ((std::size_t{1} << input_qubits) < images.size()) ++input_qubits;
  if ((std::size_t{1} << input_qubits) != images.size()) {
    throw std::domain_error("format_symbolic needs 2^n images");
  }
  const auto symbols = amplitude_symbols(input_qubits);
  std::optional<Complex> ref;
  for (const auto& img : images) {
    if (img.norm() > detail::kPrintTol) {
      ref = detail::first_nonzero(img);
      break;
    }
  }
  if (!ref) throw std::domain_error("every image is zero");

  std::string out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    const auto& img = images[i];
    std::vector<std::pair<Index, double>> terms;
    for (Index k = 0; k < img.dimension(); ++k) {
      if (std::abs(img[k]) > detail::kPrintTol) {
        terms.emplace_back(k, detail::real_ratio(img[k], *ref));
      }
    }
    if (terms.empty()) continue;
    const double lead = terms.front().second < 0 ? -1.0 : 1.0;
    std::string body;
    for (const auto& [k, c] : terms) {
      body += detail::signed_term(c * lead,
                                  "|" + ket_label(k, img.num_qubits()) + ">",
                                  body.empty());
    }
    if (terms.size() > 1) body = "(" + body + ")";
    out += detail::signed_term(lead, symbols[i] + body, out.empty());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Symbolic receiver states
// ---------------------------------------------------------------------------

/// Receiver images after a sequence of measurements with fixed outcomes.
/// Each step is (subset in the register at that point, basis, outcome).
struct FixedOutcome {
  std::vector<int> subset;
  MeasurementBasis basis;
  std::size_t outcome;
};

inline std::vector<StateVector> receiver_images(
    int input_qubits, const StateVector& channel,
    const std::vector<FixedOutcome>& steps) {
  std::vector<StateVector> images;
  for (Index i = 0; i < (Index{1} << input_qubits); ++i) {
    auto state = tensor(basis_state(input_qubits, i), channel);
    for (const auto& st : steps) {
      state = project_all(state, st.subset, st.basis).residuals.at(st.outcome);
    }
    images.push_back(std::move(state));
  }
  return images;
}

// ---------------------------------------------------------------------------
// Regenerated tables
// ---------------------------------------------------------------------------

/// Alice-local label of an encoding operator: Z then X factors, numbered by
/// her own qubits in ascending position order.
inline std::string alice_local_label(const PauliString& p,
                                     const PartyAssignment& parties) {
  const auto alice = parties.positions_of(Party::alice);
  std::string zs;
  std::string xs;
  for (std::size_t local = 0; local < alice.size(); ++local) {
    const int global = alice[local];
    if (p.has_z(global)) zs += "Z" + std::to_string(local + 1);
    if (p.has_x(global)) xs += "X" + std::to_string(local + 1);
  }
  for (int q : p.support()) {
    if (parties.owner(q) != Party::alice) {
      throw std::domain_error("operator touches a qubit Alice does not hold");
    }
  }
  const auto label = zs + xs;
  return label.empty() ? "I" : label;
}

/// Name of `s` as a named GHZ state on (1,2,3) times a Bell state on (4,5),
/// e.g. "chi- psi+", up to global phase.
inline std::string ghz_bell_name(const StateVector& s) {
  for (std::size_t g = 0; g < 8; ++g) {
    for (std::size_t b = 8; b < 12; ++b) {
      const auto candidate = tensor(named_state(kAllNamedStates[g]),
                                    named_state(kAllNamedStates[b]));
      if (fidelity(candidate, s) < 1.0 - kAlgebraicTol) continue;
      return std::string(name_of(kAllNamedStates[g])) + " " +
             std::string(name_of(kAllNamedStates[b]));
    }
  }
  throw std::domain_error("state is not a GHZ-Bell product");
}

/// Superdense coding with the five-qubit channel: all 32 encodings.
inline Table superdense_table(int n = 2) {
  const auto channel = channel_teleport(n);
  const int width = 2 * n + 1;
  Table t{"superdense_N" + std::to_string(n),
          {"bits", "operation", "state", "decomposition"},
          {}};
  for (Index j = 0; j < (Index{1} << width); ++j) {
    const BitString bits(width, j);
    const auto op = encode_pauli(n, bits);
    const auto zeta = apply_pauli(channel.state, op);
    std::string decomposition = n == 2 ? ghz_bell_name(zeta) : "";
    t.rows.push_back({{bits.to_string(), alice_local_label(op, channel.parties),
                       "zeta" + std::to_string(j) + " = " + format_half(zeta),
                       decomposition},
                      {{"zeta" + std::to_string(j), zeta}}});
  }
  return t;
}

namespace detail {

/// One row per reachable outcome of a single measurement: the measured
/// element and the receiver's state as a function of the input.
inline Table outcome_table(std::string name, int input_qubits,
                           const StateVector& channel,
                           std::vector<FixedOutcome> prefix,
                           const std::vector<int>& subset,
                           const MeasurementBasis& basis, bool half_elements) {
  Table t{std::move(name), {"outcome", "receiver_state"}, {}};
  for (std::size_t k = 0; k < basis.size(); ++k) {
    auto steps = prefix;
    steps.push_back({subset, basis, k});
    const auto images = receiver_images(input_qubits, channel, steps);
    bool reachable = false;
    for (const auto& img : images) reachable = reachable || img.norm() > kPrintTol;
    if (!reachable) continue;
    const auto& e = basis[k];
    t.rows.push_back({{half_elements ? format_uniform(e) : format_unnormalized(e),
                       format_symbolic(images)},
                      {{basis.label() + "_" + std::to_string(k), e}}});
  }
  return t;
}

}  // namespace detail

/// Single-qubit teleportation over the five-qubit channel.
inline Table fivequbit_table() {
  const auto plan = fivequbit_plan();
  const auto& st = plan.stages.front();
  return detail::outcome_table("teleport_fivequbit", 1, plan.channel, {},
                               st.subset, st.basis, true);
}

/// Two-qubit teleportation, rows in Omega index order.
inline Table teleport_table(int n = 2) {
  const auto plan = teleport_plan(n);
  const auto& st = plan.stages.front();
  return detail::outcome_table("teleport_N" + std::to_string(n), n,
                               plan.channel, {}, st.subset, st.basis, true);
}

/// Splitting protocol (i): Alice's Bell outcome and the Bob-Charlie state.
inline Table qis_i_alice_table() {
  const auto plan = qis_plan(QisProtocol::i);
  const auto& st = plan.stages[0];
  return detail::outcome_table("qis_i_alice", 1, plan.channel, {}, st.subset,
                               st.basis, false);
}

/// Splitting protocol (i): Bob's outcome and Charlie's state, given Alice
/// obtained the first Bell state.
inline Table qis_i_bob_table(std::size_t alice_outcome = 0) {
  const auto plan = qis_plan(QisProtocol::i);
  const auto& a = plan.stages[0];
  const auto& b = plan.stages[1];
  return detail::outcome_table("qis_i_bob", 1, plan.channel,
                               {{a.subset, a.basis, alice_outcome}}, b.subset,
                               b.basis, false);
}

/// Two-qubit splitting: Alice's outcome and the Bob-Charlie state, rows in
/// Omega index order.
inline Table qis_two_table() {
  const auto plan = qis_plan(QisProtocol::two);
  const auto& st = plan.stages[0];
  return detail::outcome_table("qis_two_alice", 2, plan.channel, {}, st.subset,
                               st.basis, true);
}

/// Charlie's correction for every reachable outcome pair.
inline Table correction_table(QisProtocol p, int n = 2) {
  const auto plan = qis_plan(p, n);
  Table t{"corrections_" + plan.id, {"alice", "bob", "correction"}, {}};
  const auto input = basis_state(plan.input_qubits, 0);
  for (const auto& b : enumerate_branches(plan, input)) {
    t.rows.push_back({{std::to_string(b.outcomes[0]),
                       std::to_string(b.outcomes[1]), b.correction.to_string()},
                      {}});
  }
  return t;
}

}  // namespace ghzbell
