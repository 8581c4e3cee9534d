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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ghzbell/measurement.hpp"
#include "ghzbell/statevec.hpp"

namespace ghzbell {

// ---------------------------------------------------------------------------
// Parties and bit strings
// ---------------------------------------------------------------------------

enum class Party { alice, bob, charlie };

inline std::string_view to_string(Party p) {
  switch (p) {
    case Party::alice: return "alice";
    case Party::bob: return "bob";
    case Party::charlie: return "charlie";
  }
  return "?";
}

/// Owner of every qubit position of a shared register.
class PartyAssignment {
 public:
  PartyAssignment() = default;
  explicit PartyAssignment(std::vector<Party> owner) : owner_(std::move(owner)) {}

  int num_qubits() const { return static_cast<int>(owner_.size()); }
  Party owner(int position) const {
    require_position(num_qubits(), position);
    return owner_[static_cast<std::size_t>(position - 1)];
  }

  std::vector<int> positions_of(Party p) const {
    std::vector<int> out;
    for (int i = 1; i <= num_qubits(); ++i) {
      if (owner_[static_cast<std::size_t>(i - 1)] == p) out.push_back(i);
    }
    return out;
  }
  int count(Party p) const { return static_cast<int>(positions_of(p).size()); }

  /// Same ownership with every position shifted right by `offset` and the
  /// first `offset` positions given to `front`.
  PartyAssignment with_prefix(int offset, Party front) const {
    std::vector<Party> owner(static_cast<std::size_t>(offset), front);
    owner.insert(owner.end(), owner_.begin(), owner_.end());
    return PartyAssignment(std::move(owner));
  }

  friend bool operator==(const PartyAssignment&,
                         const PartyAssignment&) = default;

 private:
  std::vector<Party> owner_;
};

/// Classical string a_len ... a_2 a_1 with a_1 least significant; its
/// decimal value is sum a_k 2^(k-1).
class BitString {
 public:
  BitString(int length, Index value) : length_(length), value_(value) {
    if (length < 1 || length > 63) {
      throw std::domain_error("bit string length out of range");
    }
    if (value >> length) {
      throw std::domain_error("value " + std::to_string(value) +
                              " does not fit in " + std::to_string(length) +
                              " bits");
    }
  }

  /// Parses the written form, most significant bit (a_len) first.
  static BitString parse(std::string_view text) {
    if (text.empty()) throw std::domain_error("empty bit string");
    return BitString(static_cast<int>(text.size()), ket_index(text));
  }

  int length() const { return length_; }
  Index value() const { return value_; }
  /// a_k, 1-based.
  bool bit(int k) const {
    if (k < 1 || k > length_) throw std::domain_error("bit index out of range");
    return (value_ >> (k - 1)) & 1U;
  }
  std::string to_string() const { return ket_label(value_, length_); }

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  int length_;
  Index value_;
};

// ---------------------------------------------------------------------------
// Named GHZ-family and Bell states
// ---------------------------------------------------------------------------

enum class NamedState {
  xi_plus, xi_minus, chi_plus, chi_minus,
  vartheta_plus, vartheta_minus, theta_plus, theta_minus,
  psi_plus, psi_minus, phi_plus, phi_minus,
};

inline constexpr std::array<NamedState, 12> kAllNamedStates = {
    NamedState::xi_plus,       NamedState::xi_minus,
    NamedState::chi_plus,      NamedState::chi_minus,
    NamedState::vartheta_plus, NamedState::vartheta_minus,
    NamedState::theta_plus,    NamedState::theta_minus,
    NamedState::psi_plus,      NamedState::psi_minus,
    NamedState::phi_plus,      NamedState::phi_minus,
};

inline std::string_view name_of(NamedState s) {
  constexpr std::array<std::string_view, 12> names = {
      "xi+", "xi-", "chi+", "chi-", "vartheta+", "vartheta-",
      "theta+", "theta-", "psi+", "psi-", "phi+", "phi-"};
  return names[static_cast<std::size_t>(s)];
}

inline StateVector named_state(NamedState s) {
  // Each is (|u> ± |ū>)/√2 where ū is the bitwise complement of u.
  constexpr std::array<std::string_view, 6> low = {"000", "011", "010",
                                                   "001", "00",  "01"};
  constexpr std::array<std::string_view, 6> high = {"111", "100", "101",
                                                    "110", "11",  "10"};
  const auto family = static_cast<std::size_t>(s) / 2;
  const int sign = (static_cast<int>(s) % 2 == 0) ? 1 : -1;
  return ket_sum({{low[family], 1}, {high[family], sign}});
}

inline StateVector named_state(std::string_view name) {
  for (NamedState s : kAllNamedStates) {
    if (name_of(s) == name) return named_state(s);
  }
  throw std::domain_error("unknown named state '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Composite GHZ-Bell channels
// ---------------------------------------------------------------------------

struct Channel {
  StateVector state;
  PartyAssignment parties;
};

namespace detail {

inline void require_order(int n) {
  if (n < 1) throw std::domain_error("N must be >= 1, got " + std::to_string(n));
  if (3 * n > kMaxQubits) throw std::domain_error("N too large for dense simulation");
}

/// |xi+> on positions 1,2,3 followed by N-1 copies of |psi+> on
/// (2m+2, 2m+3).
inline StateVector ghz_bell_product(int n) {
  return tensor(named_state(NamedState::xi_plus),
                tensor_power(named_state(NamedState::psi_plus), n - 1));
}

}  // namespace detail

/// 2N+1 qubit channel: Alice holds the first two GHZ qubits and the first
/// qubit of every Bell pair; Bob holds the rest.
inline Channel channel_teleport(int n) {
  detail::require_order(n);
  std::vector<Party> owner = {Party::alice, Party::alice, Party::bob};
  for (int m = 1; m < n; ++m) {
    owner.push_back(Party::alice);
    owner.push_back(Party::bob);
  }
  return {detail::ghz_bell_product(n), PartyAssignment(std::move(owner))};
}

/// Same register as `channel_teleport`, split three ways: the GHZ state is
/// shared A/B/C and every Bell pair A/C.
inline Channel channel_qis(int n) {
  detail::require_order(n);
  std::vector<Party> owner = {Party::alice, Party::bob, Party::charlie};
  for (int m = 1; m < n; ++m) {
    owner.push_back(Party::alice);
    owner.push_back(Party::charlie);
  }
  return {detail::ghz_bell_product(n), PartyAssignment(std::move(owner))};
}

/// Ownership of the five-qubit channel for the three single-qubit splitting
/// protocols, in order (i), (ii), (iii).
inline std::array<PartyAssignment, 3> qis_single_assignments() {
  using enum Party;
  return {PartyAssignment({alice, bob, bob, bob, charlie}),
          PartyAssignment({alice, alice, bob, bob, charlie}),
          PartyAssignment({alice, alice, bob, alice, charlie})};
}

// ---------------------------------------------------------------------------
// Generated Omega bases
// ---------------------------------------------------------------------------

/// (Z_k)^{b_k} (X_k)^{b_{k+N}} for k = 1..N on a register of `num_qubits`,
/// where j = b_2N ... b_1.
inline PauliString omega_pauli(int n, Index j, int num_qubits) {
  if (j >> (2 * n)) {
    throw std::domain_error("outcome index " + std::to_string(j) +
                            " out of range for N=" + std::to_string(n));
  }
  PauliString p(num_qubits);
  for (int k = 1; k <= n; ++k) {
    if ((j >> (k - 1)) & 1U) p.add_z(k);
    if ((j >> (k - 1 + n)) & 1U) p.add_x(k);
  }
  return p;
}

/// Placement of xi+ ⊗ psi+^(N-1) onto Alice's measured register (N input
/// qubits, then her N+1 channel qubits ascending). The GHZ factor joins input
/// qubit 1 with her two GHZ qubits; Bell factor m joins input qubit m+1 with
/// her half of Bell pair m. Gives [1,4,3,2,5] at N=2.
inline QubitPermutation omega_placement_teleport(int n) {
  detail::require_order(n);
  std::vector<int> placement = {1, n + 2, n + 1};
  for (int m = 1; m < n; ++m) {
    placement.push_back(m + 1);
    placement.push_back(n + 2 + m);
  }
  return QubitPermutation(std::move(placement));
}

inline MeasurementBasis omega_basis_teleport(int n) {
  const auto omega0 =
      permute(detail::ghz_bell_product(n), omega_placement_teleport(n));
  const int width = 2 * n + 1;
  std::vector<StateVector> elements;
  elements.reserve(Index{1} << (2 * n));
  for (Index j = 0; j < (Index{1} << (2 * n)); ++j) {
    elements.push_back(apply_pauli(omega0, omega_pauli(n, j, width)));
  }
  return MeasurementBasis("omega_teleport_N" + std::to_string(n),
                          std::move(elements));
}

/// psi+^N with the k-th Bell factor on positions (k, N+k).
inline QubitPermutation omega_placement_qis(int n) {
  detail::require_order(n);
  std::vector<int> placement;
  for (int k = 1; k <= n; ++k) {
    placement.push_back(k);
    placement.push_back(n + k);
  }
  return QubitPermutation(std::move(placement));
}

inline MeasurementBasis omega_basis_qis(int n) {
  const auto omega0 =
      permute(tensor_power(named_state(NamedState::psi_plus), n),
              omega_placement_qis(n));
  std::vector<StateVector> elements;
  elements.reserve(Index{1} << (2 * n));
  for (Index j = 0; j < (Index{1} << (2 * n)); ++j) {
    elements.push_back(apply_pauli(omega0, omega_pauli(n, j, 2 * n)));
  }
  return MeasurementBasis("omega_qis_N" + std::to_string(n),
                          std::move(elements));
}

// ---------------------------------------------------------------------------
// Fixed bases
// ---------------------------------------------------------------------------

/// Five-particle basis of the single-qubit teleportation over the five-qubit
/// channel (input, then Alice's four channel qubits).
inline MeasurementBasis fivequbit_basis() {
  return MeasurementBasis(
      "fivequbit_teleport",
      {ket_sum({{"00000", 1}, {"01110", 1}, {"10001", 1}, {"11111", 1}}),
       ket_sum({{"00000", 1}, {"01110", 1}, {"10001", -1}, {"11111", -1}}),
       ket_sum({{"00001", 1}, {"01111", 1}, {"10000", 1}, {"11110", 1}}),
       ket_sum({{"00001", 1}, {"01111", 1}, {"10000", -1}, {"11110", -1}})});
}

/// Order: psi+, psi-, phi+, phi- (|00>±|11>, |01>±|10>).
inline MeasurementBasis bell_basis() {
  return MeasurementBasis("bell", {named_state(NamedState::psi_plus),
                                   named_state(NamedState::psi_minus),
                                   named_state(NamedState::phi_plus),
                                   named_state(NamedState::phi_minus)});
}

/// Order: |+>, |->.
inline MeasurementBasis hadamard_basis() {
  return MeasurementBasis("hadamard",
                          {ket_sum({{"0", 1}, {"1", 1}}),
                           ket_sum({{"0", 1}, {"1", -1}})});
}

/// Bob's three-qubit basis in splitting protocol (i); spans half the space.
/// Order: |000>+|111>, |001>+|110>, |000>-|111>, |001>-|110>.
inline MeasurementBasis ghz_pair_basis() {
  return MeasurementBasis("ghz_pair", {ket_sum({{"000", 1}, {"111", 1}}),
                                       ket_sum({{"001", 1}, {"110", 1}}),
                                       ket_sum({{"000", 1}, {"111", -1}}),
                                       ket_sum({{"001", 1}, {"110", -1}})});
}

/// Alice's three-particle basis in splitting protocol (ii). The first four
/// elements are the only ones reachable from the channel.
inline MeasurementBasis three_particle_basis() {
  return MeasurementBasis("three_particle", {ket_sum({{"000", 1}, {"111", 1}}),
                                             ket_sum({{"000", 1}, {"111", -1}}),
                                             ket_sum({{"011", 1}, {"100", 1}}),
                                             ket_sum({{"011", 1}, {"100", -1}}),
                                             ket_sum({{"001", 1}, {"110", 1}}),
                                             ket_sum({{"001", 1}, {"110", -1}}),
                                             ket_sum({{"010", 1}, {"101", 1}}),
                                             ket_sum({{"010", 1}, {"101", -1}})});
}

/// Alice's four-particle basis in splitting protocol (iii).
inline MeasurementBasis four_particle_basis() {
  return MeasurementBasis("four_particle",
                          {ket_sum({{"0000", 1}, {"1111", 1}}),
                           ket_sum({{"0000", 1}, {"1111", -1}}),
                           ket_sum({{"0110", 1}, {"1001", 1}}),
                           ket_sum({{"0110", 1}, {"1001", -1}}),
                           ket_sum({{"0001", 1}, {"1110", 1}}),
                           ket_sum({{"0001", 1}, {"1110", -1}}),
                           ket_sum({{"1000", 1}, {"0111", 1}}),
                           ket_sum({{"1000", 1}, {"0111", -1}})});
}

inline std::vector<MeasurementBasis> fixed_bases() {
  return {fivequbit_basis(),         three_particle_basis(), four_particle_basis(),
          bell_basis(),           ghz_pair_basis(),       hadamard_basis()};
}

}  // namespace ghzbell
