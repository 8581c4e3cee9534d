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

#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include "ghzbell/random.hpp"
#include "ghzbell/statevec.hpp"

namespace ghzbell {

/// Ordered list of states on `subset_size` qubits used as projective
/// measurement outcomes. The list may span only a subspace.
///
/// Immutable once built. The Gram deviation and the sparse support of every
/// element are computed on construction so repeated measurements are cheap.
class MeasurementBasis {
 public:
  MeasurementBasis(std::string label, std::vector<StateVector> elements)
      : label_(std::move(label)), elements_(std::move(elements)) {
    if (elements_.empty()) throw std::domain_error("basis has no elements");
    subset_size_ = elements_.front().num_qubits();
    if (subset_size_ < 1) throw std::domain_error("basis on zero qubits");
    for (const auto& e : elements_) {
      if (e.num_qubits() != subset_size_) {
        throw std::domain_error("basis '" + label_ +
                                "' mixes element sizes");
      }
    }
    if (elements_.size() > elements_.front().dimension()) {
      throw std::domain_error("basis '" + label_ + "' has more elements than "
                              "the space dimension");
    }
    supports_.reserve(elements_.size());
    for (const auto& e : elements_) {
      std::vector<Index> nz;
      for (Index i = 0; i < e.dimension(); ++i) {
        if (e[i] != Complex{}) nz.push_back(i);
      }
      supports_.push_back(std::move(nz));
    }
    gram_deviation_ = compute_gram_deviation();
  }

  const std::string& label() const { return label_; }
  int subset_size() const { return subset_size_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<StateVector>& elements() const { return elements_; }
  const StateVector& operator[](std::size_t k) const { return elements_[k]; }
  const std::vector<Index>& support(std::size_t k) const { return supports_[k]; }

  /// max |<e_i|e_j> - delta_ij| over all pairs.
  double gram_deviation() const { return gram_deviation_; }
  bool is_orthonormal(double tol = kAlgebraicTol) const {
    return gram_deviation_ <= tol;
  }
  bool is_complete() const {
    return elements_.size() == elements_.front().dimension();
  }

 private:
  double compute_gram_deviation() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      for (std::size_t j = i; j < elements_.size(); ++j) {
        Complex g{};
        // Sparse dot product over the smaller support.
        const auto& small = supports_[i].size() <= supports_[j].size()
                                ? supports_[i]
                                : supports_[j];
        for (Index idx : small) {
          g += std::conj(elements_[i][idx]) * elements_[j][idx];
        }
        const double expect = (i == j) ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(g - expect));
      }
    }
    return worst;
  }

  std::string label_;
  int subset_size_ = 0;
  std::vector<StateVector> elements_;
  std::vector<std::vector<Index>> supports_;
  double gram_deviation_ = 0.0;
};

/// Index bookkeeping for splitting a register into a measured subset (in the
/// given order) and its complement (ascending positions).
class SubsetLayout {
 public:
  SubsetLayout(int num_qubits, std::span<const int> subset)
      : num_qubits_(num_qubits), subset_(subset.begin(), subset.end()) {
    std::vector<bool> used(static_cast<std::size_t>(num_qubits) + 1, false);
    for (int p : subset_) {
      require_position(num_qubits, p);
      if (used[static_cast<std::size_t>(p)]) {
        throw std::domain_error("measured subset repeats position " +
                                std::to_string(p));
      }
      used[static_cast<std::size_t>(p)] = true;
    }
    for (int p = 1; p <= num_qubits; ++p) {
      if (!used[static_cast<std::size_t>(p)]) complement_.push_back(p);
    }
    subset_index_ = scatter_table(subset_);
    complement_index_ = scatter_table(complement_);
  }

  int num_qubits() const { return num_qubits_; }
  const std::vector<int>& subset() const { return subset_; }
  const std::vector<int>& complement() const { return complement_; }

  /// Full-register index of (subset-local index, complement-local index).
  Index join(Index subset_local, Index complement_local) const {
    return subset_index_[subset_local] | complement_index_[complement_local];
  }
  Index complement_dimension() const { return complement_index_.size(); }

 private:
  std::vector<Index> scatter_table(const std::vector<int>& positions) const {
    const std::size_t m = positions.size();
    std::vector<Index> table(Index{1} << m);
    for (Index local = 0; local < table.size(); ++local) {
      Index full = 0;
      for (std::size_t t = 0; t < m; ++t) {
        if (local & (Index{1} << (m - 1 - t))) {
          full |= qubit_bit(num_qubits_, positions[t]);
        }
      }
      table[local] = full;
    }
    return table;
  }

  int num_qubits_;
  std::vector<int> subset_;
  std::vector<int> complement_;
  std::vector<Index> subset_index_;
  std::vector<Index> complement_index_;
};

/// Unnormalized residuals (<e_k| ⊗ I)|state> on the complement, one per basis
/// element, plus the squared norm the state carries outside the basis span.
struct Projection {
  std::vector<StateVector> residuals;
  std::vector<double> weights;
  double out_of_span = 0.0;
};

inline Projection project_all(const StateVector& state,
                              std::span<const int> subset,
                              const MeasurementBasis& basis) {
  if (static_cast<int>(subset.size()) != basis.subset_size()) {
    throw std::domain_error("basis '" + basis.label() + "' acts on " +
                            std::to_string(basis.subset_size()) +
                            " qubits, subset has " +
                            std::to_string(subset.size()));
  }
  const SubsetLayout layout(state.num_qubits(), subset);
  const int rest = static_cast<int>(layout.complement().size());
  Projection out;
  out.residuals.reserve(basis.size());
  double captured = 0.0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    auto residual = StateVector::zeros(rest);
    const auto& element = basis[k];
    for (Index s : basis.support(k)) {
      const Complex coeff = std::conj(element[s]);
      for (Index c = 0; c < layout.complement_dimension(); ++c) {
        residual[c] += coeff * state[layout.join(s, c)];
      }
    }
    const double w = residual.norm_squared();
    captured += w;
    out.weights.push_back(w);
    out.residuals.push_back(std::move(residual));
  }
  out.out_of_span = std::max(0.0, state.norm_squared() - captured);
  return out;
}

struct MeasurementOutcome {
  std::size_t index = 0;
  StateVector post;
  double probability = 0.0;
};

namespace detail {

inline void require_measurable(const StateVector& state,
                               const MeasurementBasis& basis) {
  if (!basis.is_orthonormal()) {
    throw std::domain_error("basis '" + basis.label() +
                            "' is not orthonormal (Gram deviation " +
                            std::to_string(basis.gram_deviation()) + ")");
  }
  if (!state.is_normalized()) {
    throw std::domain_error("measured state is not normalized");
  }
}

inline void require_support(const Projection& proj,
                            const MeasurementBasis& basis) {
  if (proj.out_of_span > kSupportTol) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", std::sqrt(proj.out_of_span));
    throw ProtocolError("state has residual norm " + std::string(buf) +
                        " outside the span of basis '" + basis.label() + "'");
  }
}

}  // namespace detail

/// Collapses onto outcome `k` without sampling. The measured qubits are
/// removed; the post-state lives on the complement in ascending order.
inline MeasurementOutcome collapse(const StateVector& state,
                                   std::span<const int> subset,
                                   const MeasurementBasis& basis,
                                   std::size_t k) {
  detail::require_measurable(state, basis);
  if (k >= basis.size()) throw std::domain_error("outcome index out of range");
  auto proj = project_all(state, subset, basis);
  detail::require_support(proj, basis);
  if (proj.weights[k] <= 0.0) {
    throw ProtocolError("outcome " + std::to_string(k) + " of basis '" +
                        basis.label() + "' has zero probability");
  }
  return {k, proj.residuals[k].normalized(), proj.weights[k]};
}

/// Born-rule measurement of `subset` in `basis`.
inline MeasurementOutcome measure_in_basis(const StateVector& state,
                                           std::span<const int> subset,
                                           const MeasurementBasis& basis,
                                           Rng& rng) {
  detail::require_measurable(state, basis);
  auto proj = project_all(state, subset, basis);
  detail::require_support(proj, basis);
  double total = 0.0;
  for (double w : proj.weights) total += w;
  const double u = uniform01(rng) * total;
  double acc = 0.0;
  std::size_t chosen = proj.weights.size();
  for (std::size_t k = 0; k < proj.weights.size(); ++k) {
    if (proj.weights[k] <= 0.0) continue;
    chosen = k;
    acc += proj.weights[k];
    if (u < acc) break;
  }
  return {chosen, proj.residuals[chosen].normalized(), proj.weights[chosen]};
}

}  // namespace ghzbell
