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

// Brute-force oracles. Everything here is written against the dense state
// primitives only and never calls into the protocol headers, so it can be
// used to check them.

#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ghzbell/density.hpp"
#include "ghzbell/measurement.hpp"
#include "ghzbell/statevec.hpp"

namespace ghzbell {

struct Check {
  std::string name;
  double measured = 0.0;
  double bound = 0.0;
  bool pass = false;
};

/// measured <= bound
inline Check at_most(std::string name, double measured, double bound) {
  return {std::move(name), measured, bound, measured <= bound};
}
/// measured >= bound
inline Check at_least(std::string name, double measured, double bound) {
  return {std::move(name), measured, bound, measured >= bound};
}
/// |measured - expected| <= tol; stored as the deviation against tol.
inline Check near(std::string name, double measured, double expected,
                  double tol) {
  const double dev = std::abs(measured - expected);
  return {std::move(name), dev, tol, dev <= tol};
}

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.pass; });
  }
  void add(Check c) { checks.push_back(std::move(c)); }
  void merge(const VerificationReport& other) {
    for (const auto& c : other.checks) {
      checks.push_back({other.suite + "/" + c.name, c.measured, c.bound, c.pass});
    }
  }
  const Check* find(std::string_view name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

/// Full Gram matrix check; independent of the cached deviation inside
/// MeasurementBasis.
inline VerificationReport check_orthonormal(const MeasurementBasis& basis) {
  const auto& e = basis.elements();
  std::vector<std::vector<Index>> nonzero(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (Index k = 0; k < e[i].dimension(); ++k) {
      if (e[i][k] != Complex{}) nonzero[i].push_back(k);
    }
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      Complex g{};
      for (Index k : nonzero[i]) g += std::conj(e[i][k]) * e[j][k];
      worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
    }
  }
  VerificationReport r{"orthonormal:" + basis.label(), {}};
  r.add(at_most("max_gram_deviation", worst, kAlgebraicTol));
  return r;
}

struct DecomposedBranch {
  std::size_t outcome = 0;
  /// Normalized state on the complement; sqrt(weight) * basis[outcome] ⊗
  /// residual is the exact component.
  StateVector residual;
  double weight = 0.0;
};

struct Decomposition {
  std::vector<DecomposedBranch> branches;
  double out_of_span = 0.0;

  double total_weight() const {
    double t = 0.0;
    for (const auto& b : branches) t += b.weight;
    return t;
  }
};

namespace detail {

/// Splits a full index into (subset-local, complement-local) by reading bits
/// one qubit at a time.
inline std::pair<Index, Index> split_index(Index full, int n,
                                           const std::vector<int>& subset,
                                           const std::vector<int>& complement) {
  Index s = 0;
  Index c = 0;
  for (int p : subset) s = (s << 1) | ((full & qubit_bit(n, p)) ? 1U : 0U);
  for (int p : complement) c = (c << 1) | ((full & qubit_bit(n, p)) ? 1U : 0U);
  return {s, c};
}

inline std::vector<int> complement_of(int n, const std::vector<int>& subset) {
  std::vector<int> out;
  for (int p = 1; p <= n; ++p) {
    if (std::find(subset.begin(), subset.end(), p) == subset.end()) {
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace detail

/// Expands `combined` as sum_j sqrt(w_j) |basis_j>_{alice} |residual_j>.
/// Branches with weight at or below `floor` are dropped.
inline Decomposition decompose(const StateVector& combined,
                               const std::vector<int>& alice_positions,
                               const MeasurementBasis& basis,
                               double floor = 1e-14) {
  const int n = combined.num_qubits();
  if (static_cast<int>(alice_positions.size()) != basis.subset_size()) {
    throw std::domain_error("decompose: basis size does not match positions");
  }
  for (int p : alice_positions) require_position(n, p);
  const auto complement = detail::complement_of(n, alice_positions);
  const int rest = static_cast<int>(complement.size());

  std::vector<StateVector> raw(basis.size(), StateVector::zeros(rest));
  for (Index i = 0; i < combined.dimension(); ++i) {
    if (combined[i] == Complex{}) continue;
    const auto [s, c] =
        detail::split_index(i, n, alice_positions, complement);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      raw[k][c] += std::conj(basis[k][s]) * combined[i];
    }
  }
  Decomposition d;
  double captured = 0.0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const double w = raw[k].norm_squared();
    captured += w;
    if (w > floor) d.branches.push_back({k, raw[k].scaled(1.0 / std::sqrt(w)), w});
  }
  d.out_of_span = std::max(0.0, combined.norm_squared() - captured);
  return d;
}

/// Inverse of `decompose`: sum_j sqrt(w_j) basis_j ⊗ residual_j with the
/// basis qubits put back on `alice_positions`.
inline StateVector reassemble(const Decomposition& d,
                              const std::vector<int>& alice_positions,
                              const MeasurementBasis& basis, int num_qubits) {
  const auto complement = detail::complement_of(num_qubits, alice_positions);
  std::vector<int> placement = alice_positions;
  placement.insert(placement.end(), complement.begin(), complement.end());
  const QubitPermutation perm(placement);
  auto out = StateVector::zeros(num_qubits);
  for (const auto& b : d.branches) {
    const auto piece = permute(tensor(basis[b.outcome], b.residual), perm);
    const double amp = std::sqrt(b.weight);
    for (Index i = 0; i < out.dimension(); ++i) out[i] += amp * piece[i];
  }
  return out;
}

/// Thrown when more than one Pauli string restores the target.
class AmbiguousCorrection : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The unique Pauli string P supported on `candidate_qubits` with
/// fidelity(P actual, target) >= 1 - 1e-10, or nullopt if none exists.
inline std::optional<PauliString> search_correction(
    const StateVector& target, const std::vector<int>& candidate_qubits,
    const StateVector& actual) {
  const int n = target.num_qubits();
  if (actual.num_qubits() != n) {
    throw std::domain_error("search_correction: size mismatch");
  }
  for (int p : candidate_qubits) require_position(n, p);
  const int m = static_cast<int>(candidate_qubits.size());
  std::optional<PauliString> found;
  for (Index code = 0; code < (Index{1} << (2 * m)); ++code) {
    PauliString p(n);
    for (int t = 0; t < m; ++t) {
      if ((code >> (2 * t)) & 1U) p.add_x(candidate_qubits[static_cast<std::size_t>(t)]);
      if ((code >> (2 * t + 1)) & 1U) p.add_z(candidate_qubits[static_cast<std::size_t>(t)]);
    }
    if (fidelity(apply_pauli(actual, p), target) >= 1.0 - kAlgebraicTol) {
      if (found) {
        throw AmbiguousCorrection("corrections " + found->to_string() + " and " +
                                  p.to_string() + " both restore the target");
      }
      found = p;
    }
  }
  return found;
}

/// Entropy of the smaller side of a bipartition and its trace distance from
/// the maximally mixed state.
inline VerificationReport entanglement_report(const StateVector& state,
                                              const std::set<int>& side) {
  const int n = state.num_qubits();
  std::set<int> other;
  for (int p = 1; p <= n; ++p) {
    if (!side.contains(p)) other.insert(p);
  }
  if (side.empty() || other.empty()) {
    throw std::domain_error("entanglement_report needs a proper bipartition");
  }
  const auto& smaller = side.size() <= other.size() ? side : other;
  const auto rho = partial_trace(state, smaller);
  const int k = static_cast<int>(smaller.size());
  std::string label;
  for (int p : smaller) label += (label.empty() ? "" : ",") + std::to_string(p);
  VerificationReport r{"entanglement:{" + label + "}", {}};
  const double s = entropy(rho);
  // Measured value is the entropy itself; bound is the maximum, log2 dim.
  r.add({"entropy_bits", s, static_cast<double>(k),
         std::abs(s - k) <= kAlgebraicTol});
  r.add(at_most("distance_from_maximally_mixed",
                trace_distance(rho, DensityMatrix::maximally_mixed(k)),
                kAlgebraicTol));
  return r;
}

}  // namespace ghzbell
