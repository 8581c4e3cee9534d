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

#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "ghzbell/bases.hpp"
#include "ghzbell/protocol.hpp"

namespace ghzbell {

/// Bob's correction for outcome Omega_j: (Z_k)^{b_k} (X_k)^{b_{k+N}} on his
/// N qubits (GHZ qubit first, then the Bell partners in position order).
inline PauliString correction_for(int n, Index j) {
  return omega_pauli(n, j, n);
}

/// Alice measures her N input qubits followed by her N+1 channel qubits in
/// ascending order, in the generated Omega basis.
inline ProtocolPlan teleport_plan(int n) {
  auto channel = channel_teleport(n);
  std::vector<int> subset(static_cast<std::size_t>(n));
  std::iota(subset.begin(), subset.end(), 1);
  for (int p : channel.parties.positions_of(Party::alice)) subset.push_back(p + n);

  ProtocolPlan plan;
  plan.id = "teleport_n";
  plan.n = n;
  plan.input_qubits = n;
  plan.channel = std::move(channel.state);
  plan.stages.push_back(
      {Party::alice, Party::bob, std::move(subset), omega_basis_teleport(n), 2 * n});
  plan.correction = [n](std::span<const std::size_t> o) {
    return correction_for(n, o[0]);
  };
  plan.label = [](std::span<const std::size_t> o) {
    return "Omega_" + std::to_string(o[0]);
  };
  return plan;
}

/// Single-qubit teleportation where Alice keeps four of the five channel
/// qubits and Bob only the second half of the Bell pair.
inline ProtocolPlan fivequbit_plan() {
  ProtocolPlan plan;
  plan.id = "teleport_fivequbit";
  plan.n = 1;
  plan.input_qubits = 1;
  plan.channel = channel_teleport(2).state;
  plan.stages.push_back(
      {Party::alice, Party::bob, {1, 2, 3, 4, 5}, fivequbit_basis(), 2});
  plan.correction = [](std::span<const std::size_t> o) {
    // Rows leave Bob with a|0>+b|1>, a|0>-b|1>, a|1>+b|0>, a|1>-b|0>.
    PauliString p(1);
    if (o[0] == 1 || o[0] == 3) p.add_z(1);
    if (o[0] == 2 || o[0] == 3) p.add_x(1);
    return p;
  };
  plan.label = [](std::span<const std::size_t> o) {
    return "row_" + std::to_string(o[0] + 1);
  };
  return plan;
}

/// Bob's five-qubit-protocol channel ownership: Alice {1,2,3,4}, Bob {5}.
inline PartyAssignment fivequbit_assignment() {
  using enum Party;
  return PartyAssignment({alice, alice, alice, alice, bob});
}

inline ProtocolTranscript teleport_n(const StateVector& input, int n,
                                     std::uint64_t seed) {
  return run_protocol(teleport_plan(n), input, seed);
}

inline ProtocolTranscript teleport_1_fivequbit(const StateVector& input,
                                               std::uint64_t seed) {
  return run_protocol(fivequbit_plan(), input, seed);
}

/// The N=2 protocol; the label names the Omega row of the outcome.
inline ProtocolTranscript teleport_2(const StateVector& input,
                                     std::uint64_t seed) {
  auto plan = teleport_plan(2);
  plan.id = "teleport_2";
  return run_protocol(plan, input, seed);
}

}  // namespace ghzbell
