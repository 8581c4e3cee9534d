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

#include <numeric>
#include <vector>

#include "ghzbell/bases.hpp"
#include "ghzbell/measurement.hpp"

namespace ghzbell {

/// Alice's encoding operator for the 2N+1 bit string a_{2N+1} ... a_1.
///
/// Phase flips: a_k -> Z on global position 2k (k = 1..N).
/// Bit flips: a_{N+1} -> X on 1, a_{N+2} -> X on 2, a_{N+1+m} -> X on 2m
/// (m = 2..N). Every touched position belongs to Alice.
inline PauliString encode_pauli(int n, const BitString& bits) {
  detail::require_order(n);
  if (bits.length() != 2 * n + 1) {
    throw std::domain_error("superdense coding with N=" + std::to_string(n) +
                            " needs " + std::to_string(2 * n + 1) +
                            " bits, got " + std::to_string(bits.length()));
  }
  const int width = 2 * n + 1;
  PauliString p(width);
  for (int k = 1; k <= n; ++k) {
    if (bits.bit(k)) p.add_z(2 * k);
  }
  for (int l = 1; l <= n + 1; ++l) {
    if (bits.bit(l + n)) p.add_x(l == 1 ? 1 : 2 * l - 2);
  }
  return p;
}

inline StateVector encode(int n, const BitString& bits) {
  return apply_pauli(channel_teleport(n).state, encode_pauli(n, bits));
}

/// {|zeta_j>}, j ascending.
inline MeasurementBasis superdense_basis(int n) {
  const auto channel = channel_teleport(n).state;
  const int width = 2 * n + 1;
  std::vector<StateVector> elements;
  elements.reserve(Index{1} << width);
  for (Index j = 0; j < (Index{1} << width); ++j) {
    elements.push_back(
        apply_pauli(channel, encode_pauli(n, BitString(width, j))));
  }
  return MeasurementBasis("superdense_N" + std::to_string(n),
                          std::move(elements));
}

/// Bob's decoder: a full-register measurement in {|zeta_j>}.
class SuperdenseDecoder {
 public:
  explicit SuperdenseDecoder(int n) : n_(n), basis_(superdense_basis(n)) {
    subset_.resize(static_cast<std::size_t>(2 * n + 1));
    std::iota(subset_.begin(), subset_.end(), 1);
  }

  int order() const { return n_; }
  const MeasurementBasis& basis() const { return basis_; }

  BitString decode(const StateVector& state, Rng& rng) const {
    if (state.num_qubits() != 2 * n_ + 1) {
      throw std::domain_error("decoder for N=" + std::to_string(n_) +
                              " expects " + std::to_string(2 * n_ + 1) +
                              " qubits");
    }
    const auto outcome = measure_in_basis(state, subset_, basis_, rng);
    return BitString(2 * n_ + 1, outcome.index);
  }

 private:
  int n_;
  MeasurementBasis basis_;
  std::vector<int> subset_;
};

inline BitString decode(const StateVector& state, int n, Rng& rng) {
  return SuperdenseDecoder(n).decode(state, rng);
}

struct CapacityReport {
  Index num_states = 0;
  bool all_orthonormal = false;
  int alice_qubit_count = 0;
  bool alice_local = false;
  /// Bits per transmitted qubit as the exact ratio (2N+1)/(N+1).
  int bits = 0;
  int qubits_sent = 0;
};

inline CapacityReport capacity_check(int n) {
  const auto channel = channel_teleport(n);
  const auto basis = superdense_basis(n);
  CapacityReport r;
  r.num_states = basis.size();
  r.all_orthonormal = basis.is_orthonormal() && basis.is_complete();
  r.alice_qubit_count = channel.parties.count(Party::alice);
  r.alice_local = true;
  const int width = 2 * n + 1;
  for (Index j = 0; j < (Index{1} << width); ++j) {
    for (int p : encode_pauli(n, BitString(width, j)).support()) {
      if (channel.parties.owner(p) != Party::alice) r.alice_local = false;
    }
  }
  r.bits = width;
  r.qubits_sent = r.alice_qubit_count;
  return r;
}

}  // namespace ghzbell
