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
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ghzbell {

using Complex = std::complex<double>;
using Index = std::uint64_t;

/// Tolerance for algebraic identities (norms, orthonormality, fidelity).
inline constexpr double kAlgebraicTol = 1e-10;
/// Tolerance for the weight a state may carry outside a measurement basis.
inline constexpr double kSupportTol = 1e-8;
/// Upper bound on register width handled by the dense engine.
inline constexpr int kMaxQubits = 20;

/// Raised when a protocol invariant breaks at run time, e.g. a measured state
/// carries weight outside the span of the measurement basis.
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bit of the amplitude index that carries `position` (1-based, qubit 1 is the
/// leftmost ket symbol and the most significant bit).
constexpr Index qubit_bit(int num_qubits, int position) {
  return Index{1} << (num_qubits - position);
}

inline void require_position(int num_qubits, int position) {
  if (position < 1 || position > num_qubits) {
    throw std::domain_error("qubit position " + std::to_string(position) +
                            " outside 1.." + std::to_string(num_qubits));
  }
}

/// Dense amplitude vector over the computational basis of `num_qubits` qubits.
///
/// A zero-qubit state is a single amplitude; it appears as the residual of a
/// measurement that consumes every qubit.
class StateVector {
 public:
  StateVector() : num_qubits_(0), amplitudes_{Complex{1.0, 0.0}} {}

  StateVector(int num_qubits, std::vector<Complex> amplitudes)
      : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    if (num_qubits < 0 || num_qubits > kMaxQubits) {
      throw std::domain_error("unsupported qubit count " +
                              std::to_string(num_qubits));
    }
    if (amplitudes_.size() != (Index{1} << num_qubits)) {
      throw std::domain_error("amplitude count " +
                              std::to_string(amplitudes_.size()) +
                              " does not match 2^" + std::to_string(num_qubits));
    }
  }

  static StateVector zeros(int num_qubits) {
    if (num_qubits < 0 || num_qubits > kMaxQubits) {
      throw std::domain_error("unsupported qubit count " +
                              std::to_string(num_qubits));
    }
    return StateVector(num_qubits,
                       std::vector<Complex>(Index{1} << num_qubits));
  }

  int num_qubits() const { return num_qubits_; }
  Index dimension() const { return amplitudes_.size(); }

  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<Complex> amplitudes() { return amplitudes_; }

  const Complex& operator[](Index i) const { return amplitudes_[i]; }
  Complex& operator[](Index i) { return amplitudes_[i]; }

  double norm_squared() const {
    double total = 0.0;
    for (const auto& a : amplitudes_) total += std::norm(a);
    return total;
  }
  double norm() const { return std::sqrt(norm_squared()); }

  StateVector normalized() const {
    const double n = norm();
    if (n == 0.0) throw std::domain_error("cannot normalize the zero vector");
    StateVector out = *this;
    for (auto& a : out.amplitudes_) a /= n;
    return out;
  }

  StateVector scaled(Complex factor) const {
    StateVector out = *this;
    for (auto& a : out.amplitudes_) a *= factor;
    return out;
  }

  bool is_normalized(double tol = kAlgebraicTol) const {
    return std::abs(norm() - 1.0) <= tol;
  }

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  int num_qubits_;
  std::vector<Complex> amplitudes_;
};

inline StateVector basis_state(int num_qubits, Index index) {
  if (num_qubits < 1) throw std::domain_error("basis_state needs >= 1 qubit");
  auto out = StateVector::zeros(num_qubits);
  if (index >= out.dimension()) {
    throw std::domain_error("basis index " + std::to_string(index) +
                            " out of range for " + std::to_string(num_qubits) +
                            " qubits");
  }
  out[index] = 1.0;
  return out;
}

/// Parses a ket label such as "01011" (qubit 1 leftmost) into its index.
inline Index ket_index(std::string_view bits) {
  Index value = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::domain_error("ket label must be binary: " + std::string(bits));
    }
    value = (value << 1) | static_cast<Index>(c - '0');
  }
  return value;
}

inline std::string ket_label(Index index, int num_qubits) {
  std::string out(static_cast<std::size_t>(num_qubits), '0');
  for (int p = 1; p <= num_qubits; ++p) {
    if (index & qubit_bit(num_qubits, p)) out[p - 1] = '1';
  }
  return out;
}

/// Normalized equal-magnitude superposition of signed kets, e.g.
/// `ket_sum({{"000", 1}, {"111", -1}})`.
inline StateVector ket_sum(
    std::initializer_list<std::pair<std::string_view, int>> terms) {
  if (terms.size() == 0) throw std::domain_error("ket_sum needs terms");
  const int n = static_cast<int>(terms.begin()->first.size());
  auto out = StateVector::zeros(n);
  for (const auto& [bits, sign] : terms) {
    if (static_cast<int>(bits.size()) != n) {
      throw std::domain_error("ket_sum labels differ in length");
    }
    out[ket_index(bits)] += static_cast<double>(sign);
  }
  return out.normalized();
}

/// a ⊗ b; qubits of `a` keep positions 1..a.n.
inline StateVector tensor(const StateVector& a, const StateVector& b) {
  auto out = StateVector::zeros(a.num_qubits() + b.num_qubits());
  const Index db = b.dimension();
  for (Index i = 0; i < a.dimension(); ++i) {
    if (a[i] == Complex{}) continue;
    for (Index j = 0; j < db; ++j) out[i * db + j] = a[i] * b[j];
  }
  return out;
}

inline StateVector tensor_power(const StateVector& s, int count) {
  StateVector out;
  for (int i = 0; i < count; ++i) out = tensor(out, s);
  return out;
}

/// Product of X and Z exponents per qubit. On each qubit the operator is
/// X^x Z^z: the phase flip acts first, then the bit flip.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 0 || num_qubits > kMaxQubits) {
      throw std::domain_error("unsupported qubit count " +
                              std::to_string(num_qubits));
    }
  }

  static PauliString identity(int num_qubits) { return PauliString(num_qubits); }

  /// Masks are in amplitude-index space (bit n-p for position p).
  static PauliString from_masks(int num_qubits, Index x_mask, Index z_mask) {
    PauliString p(num_qubits);
    const Index full = (Index{1} << num_qubits) - 1;
    if ((x_mask | z_mask) & ~full) {
      throw std::domain_error("Pauli mask references qubits beyond " +
                              std::to_string(num_qubits));
    }
    p.x_mask_ = x_mask;
    p.z_mask_ = z_mask;
    return p;
  }

  PauliString& add_x(int position) {
    require_position(num_qubits_, position);
    x_mask_ ^= qubit_bit(num_qubits_, position);
    return *this;
  }
  PauliString& add_z(int position) {
    require_position(num_qubits_, position);
    z_mask_ ^= qubit_bit(num_qubits_, position);
    return *this;
  }

  int num_qubits() const { return num_qubits_; }
  Index x_mask() const { return x_mask_; }
  Index z_mask() const { return z_mask_; }
  bool is_identity() const { return x_mask_ == 0 && z_mask_ == 0; }

  bool has_x(int position) const {
    return (x_mask_ & qubit_bit(num_qubits_, position)) != 0;
  }
  bool has_z(int position) const {
    return (z_mask_ & qubit_bit(num_qubits_, position)) != 0;
  }

  std::vector<int> support() const {
    std::vector<int> out;
    for (int p = 1; p <= num_qubits_; ++p) {
      if (has_x(p) || has_z(p)) out.push_back(p);
    }
    return out;
  }

  /// "Z2Z4X1X2" style label: phase flips first, then bit flips, each in
  /// ascending position order; "I" for the identity.
  std::string to_string() const {
    std::string out;
    for (int p = 1; p <= num_qubits_; ++p) {
      if (has_z(p)) out += "Z" + std::to_string(p);
    }
    for (int p = 1; p <= num_qubits_; ++p) {
      if (has_x(p)) out += "X" + std::to_string(p);
    }
    return out.empty() ? "I" : out;
  }

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  int num_qubits_ = 0;
  Index x_mask_ = 0;
  Index z_mask_ = 0;
};

inline StateVector apply_pauli(const StateVector& state, const PauliString& op) {
  if (op.num_qubits() != state.num_qubits()) {
    throw std::domain_error("Pauli string acts on " +
                            std::to_string(op.num_qubits()) +
                            " qubits, state has " +
                            std::to_string(state.num_qubits()));
  }
  const Index x = op.x_mask();
  const Index z = op.z_mask();
  auto out = StateVector::zeros(state.num_qubits());
  // X^x Z^z |i> = (-1)^{|i&z|} |i^x>
  for (Index k = 0; k < state.dimension(); ++k) {
    const Index src = k ^ x;
    const Complex a = state[src];
    out[k] = (std::popcount(src & z) & 1) ? -a : a;
  }
  return out;
}

/// Relabeling of qubits: the s-th qubit of the input lands on global position
/// `placement[s-1]` of the output.
class QubitPermutation {
 public:
  explicit QubitPermutation(std::vector<int> placement)
      : placement_(std::move(placement)) {
    const int n = static_cast<int>(placement_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int p : placement_) {
      if (p < 1 || p > n || seen[static_cast<std::size_t>(p)]) {
        throw std::domain_error("placement is not a bijection on 1.." +
                                std::to_string(n));
      }
      seen[static_cast<std::size_t>(p)] = true;
    }
  }

  static QubitPermutation identity(int num_qubits) {
    std::vector<int> p(static_cast<std::size_t>(num_qubits));
    std::iota(p.begin(), p.end(), 1);
    return QubitPermutation(std::move(p));
  }

  int num_qubits() const { return static_cast<int>(placement_.size()); }
  const std::vector<int>& placement() const { return placement_; }

  QubitPermutation inverse() const {
    std::vector<int> inv(placement_.size());
    for (std::size_t s = 0; s < placement_.size(); ++s) {
      inv[static_cast<std::size_t>(placement_[s] - 1)] = static_cast<int>(s) + 1;
    }
    return QubitPermutation(std::move(inv));
  }

  friend bool operator==(const QubitPermutation&,
                         const QubitPermutation&) = default;

 private:
  std::vector<int> placement_;
};

inline StateVector permute(const StateVector& state,
                           const QubitPermutation& perm) {
  const int n = state.num_qubits();
  if (perm.num_qubits() != n) {
    throw std::domain_error("permutation size does not match state");
  }
  std::vector<Index> target_bit(static_cast<std::size_t>(n));
  for (int s = 1; s <= n; ++s) {
    target_bit[static_cast<std::size_t>(s - 1)] =
        qubit_bit(n, perm.placement()[static_cast<std::size_t>(s - 1)]);
  }
  auto out = StateVector::zeros(n);
  for (Index i = 0; i < state.dimension(); ++i) {
    Index j = 0;
    for (int s = 1; s <= n; ++s) {
      if (i & qubit_bit(n, s)) j |= target_bit[static_cast<std::size_t>(s - 1)];
    }
    out[j] = state[i];
  }
  return out;
}

/// <a|b>, conjugate-linear in `a`.
inline Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::domain_error("inner product of states with " +
                            std::to_string(a.num_qubits()) + " and " +
                            std::to_string(b.num_qubits()) + " qubits");
  }
  Complex total{};
  for (Index i = 0; i < a.dimension(); ++i) total += std::conj(a[i]) * b[i];
  return total;
}

inline double fidelity(const StateVector& a, const StateVector& b) {
  return std::clamp(std::norm(inner_product(a, b)), 0.0, 1.0);
}

}  // namespace ghzbell
