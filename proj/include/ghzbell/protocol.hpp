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

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ghzbell/bases.hpp"
#include "ghzbell/measurement.hpp"
#include "ghzbell/random.hpp"

namespace ghzbell {

struct ClassicalMessage {
  Party sender = Party::alice;
  Party receiver = Party::bob;
  int bit_count = 0;
  Index payload = 0;

  std::string payload_bits() const { return ket_label(payload, bit_count); }
};

/// Auditable record of one protocol run.
struct ProtocolTranscript {
  std::string protocol_id;
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> outcome_indices;
  std::vector<double> outcome_probabilities;
  std::vector<ClassicalMessage> classical_messages;
  std::vector<PauliString> corrections;
  double fidelity = 0.0;
  /// Human-facing name of the outcome, e.g. a table row; may be empty.
  std::string label;

  int total_cbits() const {
    int total = 0;
    for (const auto& m : classical_messages) total += m.bit_count;
    return total;
  }
};

/// One measurement round: `measurer` measures `subset` (positions in the
/// register as it stands at this round) and sends the outcome to `receiver`
/// in `cbits` bits.
struct MeasurementStage {
  Party measurer;
  Party receiver;
  std::vector<int> subset;
  MeasurementBasis basis;
  int cbits;
};

using CorrectionRule = std::function<PauliString(std::span<const std::size_t>)>;

/// Measurement rounds followed by a Pauli correction on whatever qubits are
/// left. The correction rule maps the outcome list to a string on those
/// qubits.
struct ProtocolPlan {
  std::string id;
  int n = 0;
  int input_qubits = 0;
  StateVector channel;
  std::vector<MeasurementStage> stages;
  CorrectionRule correction;
  std::function<std::string(std::span<const std::size_t>)> label;
};

/// One fully resolved measurement history.
struct Branch {
  std::vector<std::size_t> outcomes;
  std::vector<double> stage_probabilities;
  double probability = 1.0;
  /// Receiver's state before correction (normalized).
  StateVector received;
  PauliString correction;
  StateVector recovered;
  double fidelity = 0.0;
};

namespace detail {

inline void require_input(const ProtocolPlan& plan, const StateVector& input) {
  if (input.num_qubits() != plan.input_qubits) {
    throw std::domain_error(plan.id + " expects a " +
                            std::to_string(plan.input_qubits) +
                            "-qubit input, got " +
                            std::to_string(input.num_qubits()));
  }
  if (!input.is_normalized()) {
    throw std::domain_error(plan.id + " input is not normalized");
  }
}

inline void finish_branch(const ProtocolPlan& plan, const StateVector& input,
                          Branch& b) {
  b.correction = plan.correction(b.outcomes);
  b.recovered = apply_pauli(b.received, b.correction);
  b.fidelity = fidelity(b.recovered, input);
}

inline void enumerate_from(const ProtocolPlan& plan, const StateVector& input,
                           std::size_t stage, const StateVector& state,
                           Branch& partial, double floor,
                           std::vector<Branch>& out) {
  if (stage == plan.stages.size()) {
    Branch b = partial;
    b.received = state;
    finish_branch(plan, input, b);
    out.push_back(std::move(b));
    return;
  }
  const auto& st = plan.stages[stage];
  detail::require_measurable(state, st.basis);
  auto proj = project_all(state, st.subset, st.basis);
  detail::require_support(proj, st.basis);
  for (std::size_t k = 0; k < st.basis.size(); ++k) {
    if (proj.weights[k] <= floor) continue;
    partial.outcomes.push_back(k);
    partial.stage_probabilities.push_back(proj.weights[k]);
    const double saved = partial.probability;
    partial.probability *= proj.weights[k];
    enumerate_from(plan, input, stage + 1, proj.residuals[k].normalized(),
                   partial, floor, out);
    partial.probability = saved;
    partial.outcomes.pop_back();
    partial.stage_probabilities.pop_back();
  }
}

}  // namespace detail

/// Every measurement history with per-round probability above `floor`, in
/// first-round-major order.
inline std::vector<Branch> enumerate_branches(const ProtocolPlan& plan,
                                              const StateVector& input,
                                              double floor = 1e-12) {
  detail::require_input(plan, input);
  const auto combined = tensor(input, plan.channel);
  std::vector<Branch> out;
  Branch partial;
  detail::enumerate_from(plan, input, 0, combined, partial, floor, out);
  return out;
}

/// Samples one history with the Born rule.
inline ProtocolTranscript run_protocol(const ProtocolPlan& plan,
                                       const StateVector& input,
                                       std::uint64_t seed) {
  detail::require_input(plan, input);
  auto rng = make_rng(seed);
  ProtocolTranscript t;
  t.protocol_id = plan.id;
  t.n = plan.n;
  t.seed = seed;
  StateVector state = tensor(input, plan.channel);
  for (const auto& st : plan.stages) {
    auto m = measure_in_basis(state, st.subset, st.basis, rng);
    if (m.index >> st.cbits) {
      throw ProtocolError(plan.id + ": outcome " + std::to_string(m.index) +
                          " does not fit the " + std::to_string(st.cbits) +
                          "-bit message");
    }
    t.outcome_indices.push_back(m.index);
    t.outcome_probabilities.push_back(m.probability);
    t.classical_messages.push_back(
        {st.measurer, st.receiver, st.cbits, static_cast<Index>(m.index)});
    state = std::move(m.post);
  }
  const auto correction = plan.correction(t.outcome_indices);
  const auto recovered = apply_pauli(state, correction);
  t.corrections.push_back(correction);
  t.fidelity = fidelity(recovered, input);
  if (plan.label) t.label = plan.label(t.outcome_indices);
  return t;
}

}  // namespace ghzbell
