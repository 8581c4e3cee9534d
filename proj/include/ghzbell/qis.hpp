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

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ghzbell/bases.hpp"
#include "ghzbell/density.hpp"
#include "ghzbell/protocol.hpp"
#include "ghzbell/qis_tables.hpp"
#include "ghzbell/teleport.hpp"
#include "ghzbell/verify.hpp"

namespace ghzbell {

enum class QisProtocol { i, ii, iii, two, n };

inline std::string_view to_string(QisProtocol p) {
  switch (p) {
    case QisProtocol::i: return "i";
    case QisProtocol::ii: return "ii";
    case QisProtocol::iii: return "iii";
    case QisProtocol::two: return "two";
    case QisProtocol::n: return "n";
  }
  return "?";
}

inline QisProtocol parse_qis_protocol(std::string_view text) {
  for (auto p : {QisProtocol::i, QisProtocol::ii, QisProtocol::iii,
                 QisProtocol::two, QisProtocol::n}) {
    if (to_string(p) == text) return p;
  }
  throw std::domain_error("unknown QIS protocol '" + std::string(text) + "'");
}

inline bool is_single(QisProtocol p) {
  return p == QisProtocol::i || p == QisProtocol::ii || p == QisProtocol::iii;
}

// ---------------------------------------------------------------------------
// Register bookkeeping
// ---------------------------------------------------------------------------

/// Positions `subset` renumbered after `removed` positions are taken out.
inline std::vector<int> renumber_after_removal(const std::vector<int>& subset,
                                               const std::vector<int>& removed) {
  std::vector<int> out;
  for (int p : subset) {
    if (std::find(removed.begin(), removed.end(), p) != removed.end()) {
      throw std::domain_error("position " + std::to_string(p) + " was removed");
    }
    const auto below = std::count_if(removed.begin(), removed.end(),
                                     [p](int r) { return r < p; });
    out.push_back(p - static_cast<int>(below));
  }
  return out;
}

inline PartyAssignment remove_positions(const PartyAssignment& a,
                                        const std::vector<int>& removed) {
  std::vector<Party> owner;
  for (int p = 1; p <= a.num_qubits(); ++p) {
    if (std::find(removed.begin(), removed.end(), p) == removed.end()) {
      owner.push_back(a.owner(p));
    }
  }
  return PartyAssignment(std::move(owner));
}

/// Ownership of the combined register (input qubits first, all Alice's).
struct QisLayout {
  PartyAssignment combined;
  int input_qubits = 0;
};

namespace detail {

struct QisStages {
  MeasurementBasis alice_basis;
  int alice_cbits;
  MeasurementBasis bob_basis;
  int bob_cbits;
};

inline QisStages single_stages(QisProtocol p) {
  switch (p) {
    case QisProtocol::i: return {bell_basis(), 2, ghz_pair_basis(), 2};
    // Only the first four elements of the three-particle basis are reachable.
    case QisProtocol::ii: return {three_particle_basis(), 2, bell_basis(), 2};
    case QisProtocol::iii: return {four_particle_basis(), 3, hadamard_basis(), 1};
    default: break;
  }
  throw std::domain_error("not a single-qubit QIS protocol");
}

/// Two measurement rounds: Alice (inputs + her channel qubits), then Bob (his
/// qubits, renumbered after Alice's are gone). Charlie holds the rest.
inline ProtocolPlan two_round_plan(std::string id, int n, const StateVector& channel,
                                   const PartyAssignment& combined,
                                   int input_qubits, QisStages stages,
                                   CorrectionRule correction) {
  const auto alice = combined.positions_of(Party::alice);
  const auto after_alice = remove_positions(combined, alice);
  const auto bob = after_alice.positions_of(Party::bob);

  ProtocolPlan plan;
  plan.id = std::move(id);
  plan.n = n;
  plan.input_qubits = input_qubits;
  plan.channel = channel;
  plan.stages.push_back({Party::alice, Party::charlie, alice,
                         std::move(stages.alice_basis), stages.alice_cbits});
  plan.stages.push_back({Party::bob, Party::charlie, bob,
                         std::move(stages.bob_basis), stages.bob_cbits});
  plan.correction = std::move(correction);
  return plan;
}

inline PauliString single_table_correction(QisProtocol p, std::size_t alice,
                                           std::size_t bob) {
  const auto row = static_cast<std::size_t>(p);
  const std::int8_t code = kQisSingleCorrections.at(row).at(alice).at(bob);
  if (code < 0) {
    throw ProtocolError("no correction recorded for QIS protocol " +
                        std::string(to_string(p)) + " outcomes (" +
                        std::to_string(alice) + ", " + std::to_string(bob) + ")");
  }
  PauliString c(1);
  if (code & 1) c.add_x(1);
  if (code & 2) c.add_z(1);
  return c;
}

inline PauliString two_table_correction(std::size_t alice, std::size_t bob) {
  const auto& masks = kQisTwoCorrections.at(alice).at(bob);
  return PauliString::from_masks(2, masks[0], masks[1]);
}

}  // namespace detail

inline QisLayout qis_layout(QisProtocol p, int n = 2) {
  if (is_single(p)) {
    const auto a = qis_single_assignments()[static_cast<std::size_t>(p)];
    return {a.with_prefix(1, Party::alice), 1};
  }
  const int order = p == QisProtocol::two ? 2 : n;
  return {channel_qis(order).parties.with_prefix(order, Party::alice), order};
}

/// Charlie's rule for the two-qubit and N-qubit protocols: the Omega string
/// for Alice's outcome, with an extra phase flip on his GHZ qubit when Bob
/// reports |->.
inline PauliString qis_rule_correction(int n, Index alice, std::size_t bob) {
  auto c = correction_for(n, alice);
  if (bob == 1) c.add_z(1);
  return c;
}

/// Plan with a caller-supplied correction rule. Used both for the shipped
/// protocols and to derive correction tables by search.
inline ProtocolPlan qis_plan_with(QisProtocol p, int n, CorrectionRule rule) {
  const auto layout = qis_layout(p, n);
  if (is_single(p)) {
    return detail::two_round_plan(
        "qis_" + std::string(to_string(p)), 1, channel_teleport(2).state,
        layout.combined, 1, detail::single_stages(p), std::move(rule));
  }
  const int order = layout.input_qubits;
  return detail::two_round_plan(
      p == QisProtocol::two ? "qis_two" : "qis_n", order,
      channel_qis(order).state, layout.combined, order,
      {omega_basis_qis(order), 2 * order, hadamard_basis(), 1}, std::move(rule));
}

inline ProtocolPlan qis_plan(QisProtocol p, int n = 2) {
  if (is_single(p)) {
    return qis_plan_with(p, 1, [p](std::span<const std::size_t> o) {
      return detail::single_table_correction(p, o[0], o[1]);
    });
  }
  if (p == QisProtocol::two) {
    auto plan = qis_plan_with(p, 2, [](std::span<const std::size_t> o) {
      return detail::two_table_correction(o[0], o[1]);
    });
    plan.label = [](std::span<const std::size_t> o) {
      return "alice_" + std::to_string(o[0]) + (o[1] == 0 ? "_bob_plus" : "_bob_minus");
    };
    return plan;
  }
  return qis_plan_with(p, n, [n](std::span<const std::size_t> o) {
    return qis_rule_correction(n, o[0], o[1]);
  });
}

inline ProtocolTranscript qis_single(QisProtocol p, const StateVector& input,
                                     std::uint64_t seed) {
  if (!is_single(p)) throw std::domain_error("qis_single takes i, ii or iii");
  return run_protocol(qis_plan(p), input, seed);
}

inline ProtocolTranscript qis_two(const StateVector& input, std::uint64_t seed) {
  return run_protocol(qis_plan(QisProtocol::two), input, seed);
}

inline ProtocolTranscript qis_n(const StateVector& input, int n,
                                std::uint64_t seed) {
  return run_protocol(qis_plan(QisProtocol::n, n), input, seed);
}

// ---------------------------------------------------------------------------
// Correction search
// ---------------------------------------------------------------------------

/// Correction per reachable (Alice outcome, Bob outcome), found by exhaustive
/// Pauli search on Charlie's qubits for a generic reference input and
/// confirmed on a second one.
struct CorrectionTable {
  std::map<std::pair<std::size_t, std::size_t>, PauliString> entries;
};

inline CorrectionTable derive_correction_table(QisProtocol p, int n = 2,
                                               std::uint64_t seed = 0x5eed) {
  const auto identity_rule = [](int width) {
    return [width](std::span<const std::size_t>) {
      return PauliString::identity(width);
    };
  };
  const int charlie_qubits = is_single(p) ? 1 : (p == QisProtocol::two ? 2 : n);
  const auto plan = qis_plan_with(p, p == QisProtocol::two ? 2 : n,
                                  identity_rule(charlie_qubits));
  std::vector<int> candidates(static_cast<std::size_t>(charlie_qubits));
  std::iota(candidates.begin(), candidates.end(), 1);

  CorrectionTable table;
  for (std::uint64_t probe = 0; probe < 2; ++probe) {
    auto rng = make_rng(derive_seed(seed, probe));
    const auto input = haar_random_state(plan.input_qubits, rng);
    for (const auto& b : enumerate_branches(plan, input)) {
      const auto found = search_correction(input, candidates, b.received);
      if (!found) {
        throw ProtocolError("no Pauli correction restores the input on a " +
                            plan.id + " branch");
      }
      const auto key = std::make_pair(b.outcomes[0], b.outcomes[1]);
      auto [it, inserted] = table.entries.emplace(key, *found);
      if (!inserted && !(it->second == *found)) {
        throw ProtocolError(plan.id + " correction depends on the input");
      }
    }
  }
  return table;
}

// ---------------------------------------------------------------------------
// Secrecy
// ---------------------------------------------------------------------------

namespace detail {

inline std::set<int> as_set(const std::vector<int>& v) {
  return {v.begin(), v.end()};
}

inline double max_pairwise_distance(const std::vector<DensityMatrix>& rhos) {
  double worst = 0.0;
  for (std::size_t a = 0; a < rhos.size(); ++a) {
    for (std::size_t b = a + 1; b < rhos.size(); ++b) {
      worst = std::max(worst, trace_distance(rhos[a], rhos[b]));
    }
  }
  return worst;
}

/// Receiver's state after the first round, averaged over its outcomes, with
/// no classical message received.
inline DensityMatrix outcome_averaged(const ProtocolPlan& plan,
                                      const StateVector& combined,
                                      const PartyAssignment& parties,
                                      Party holder) {
  const auto& st = plan.stages.front();
  const auto after = remove_positions(parties, st.subset);
  const auto keep = as_set(after.positions_of(holder));
  auto proj = project_all(combined, st.subset, st.basis);
  const Eigen::Index dim = Eigen::Index{1} << keep.size();
  ComplexMatrix acc = ComplexMatrix::Zero(dim, dim);
  for (std::size_t k = 0; k < proj.residuals.size(); ++k) {
    if (proj.weights[k] <= 0.0) continue;
    acc += proj.weights[k] *
           partial_trace(proj.residuals[k].normalized(), keep).entries();
  }
  return DensityMatrix(static_cast<int>(keep.size()), std::move(acc));
}

}  // namespace detail

/// Input-independence of what each non-dealer party holds. `protocol` is one
/// of i, ii, iii, two, n, or "teleport" for the control case. Distances are
/// the largest pairwise trace distance over `trials` Haar inputs.
inline VerificationReport secrecy_check(std::string_view protocol, int n,
                                        int trials, std::uint64_t seed) {
  if (trials < 2) throw std::domain_error("secrecy_check needs >= 2 trials");
  ProtocolPlan plan;
  PartyAssignment parties;
  std::vector<std::pair<std::string, Party>> holders;
  Party averaged_holder = Party::charlie;
  if (protocol == "teleport") {
    plan = teleport_plan(n);
    parties = channel_teleport(n).parties.with_prefix(n, Party::alice);
    holders = {{"bob_pre_measurement", Party::bob}};
    averaged_holder = Party::bob;
  } else {
    const auto p = parse_qis_protocol(protocol);
    plan = qis_plan(p, n);
    parties = qis_layout(p, n).combined;
    holders = {{"bob_pre_measurement", Party::bob},
               {"charlie_pre_measurement", Party::charlie}};
  }

  std::vector<std::vector<DensityMatrix>> per_holder(holders.size());
  std::vector<DensityMatrix> averaged;
  for (int t = 0; t < trials; ++t) {
    auto rng = make_rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    const auto input = haar_random_state(plan.input_qubits, rng);
    const auto combined = tensor(input, plan.channel);
    for (std::size_t h = 0; h < holders.size(); ++h) {
      per_holder[h].push_back(partial_trace(
          combined, detail::as_set(parties.positions_of(holders[h].second))));
    }
    averaged.push_back(
        detail::outcome_averaged(plan, combined, parties, averaged_holder));
  }

  VerificationReport r{"secrecy:" + std::string(protocol), {}};
  for (std::size_t h = 0; h < holders.size(); ++h) {
    r.add(at_most(holders[h].first + "_max_trace_distance",
                  detail::max_pairwise_distance(per_holder[h]), kAlgebraicTol));
  }
  r.add(at_most(std::string(to_string(averaged_holder)) +
                    "_after_first_round_averaged_max_trace_distance",
                detail::max_pairwise_distance(averaged), kAlgebraicTol));
  return r;
}

}  // namespace ghzbell
