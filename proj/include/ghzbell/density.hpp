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

#include <Eigen/Dense>

#include <cmath>
#include <set>
#include <vector>

#include "ghzbell/statevec.hpp"

namespace ghzbell {

using ComplexMatrix = Eigen::MatrixXcd;

/// Hermitian, unit-trace operator on `num_qubits` qubits. Positivity is not
/// enforced on construction; `entropy` rejects matrices that fail it.
class DensityMatrix {
 public:
  DensityMatrix(int num_qubits, ComplexMatrix entries)
      : num_qubits_(num_qubits), entries_(std::move(entries)) {
    const Eigen::Index dim = Eigen::Index{1} << num_qubits;
    if (num_qubits < 0 || entries_.rows() != dim || entries_.cols() != dim) {
      throw std::domain_error("density matrix shape does not match 2^" +
                              std::to_string(num_qubits));
    }
    if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > kAlgebraicTol) {
      throw std::domain_error("density matrix is not Hermitian");
    }
    if (std::abs(entries_.trace() - Complex{1.0, 0.0}) > kAlgebraicTol) {
      throw std::domain_error("density matrix trace is not 1");
    }
  }

  static DensityMatrix pure(const StateVector& s) {
    const auto dim = static_cast<Eigen::Index>(s.dimension());
    Eigen::Map<const Eigen::VectorXcd> v(s.amplitudes().data(), dim);
    return DensityMatrix(s.num_qubits(), v * v.adjoint());
  }

  static DensityMatrix maximally_mixed(int num_qubits) {
    const Eigen::Index dim = Eigen::Index{1} << num_qubits;
    return DensityMatrix(
        num_qubits, ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
  }

  int num_qubits() const { return num_qubits_; }
  const ComplexMatrix& entries() const { return entries_; }

  Eigen::VectorXd eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(entries_,
                                                        Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
  }

 private:
  int num_qubits_;
  ComplexMatrix entries_;
};

/// Reduced density matrix on `keep` (positions, reported in ascending order).
inline DensityMatrix partial_trace(const StateVector& state,
                                   const std::set<int>& keep) {
  const int n = state.num_qubits();
  if (keep.empty()) throw std::domain_error("partial_trace needs kept qubits");
  for (int p : keep) require_position(n, p);

  const int k = static_cast<int>(keep.size());
  std::vector<Index> kept_bits;
  std::vector<Index> traced_bits;
  for (int p = 1; p <= n; ++p) {
    (keep.contains(p) ? kept_bits : traced_bits).push_back(qubit_bit(n, p));
  }
  auto scatter = [](Index local, const std::vector<Index>& bits) {
    Index out = 0;
    const auto m = bits.size();
    for (std::size_t t = 0; t < m; ++t) {
      if (local & (Index{1} << (m - 1 - t))) out |= bits[t];
    }
    return out;
  };
  const Index dk = Index{1} << k;
  const Index dt = Index{1} << (n - k);
  std::vector<Index> kept_index(dk);
  std::vector<Index> traced_index(dt);
  for (Index a = 0; a < dk; ++a) kept_index[a] = scatter(a, kept_bits);
  for (Index c = 0; c < dt; ++c) traced_index[c] = scatter(c, traced_bits);

  ComplexMatrix rho = ComplexMatrix::Zero(static_cast<Eigen::Index>(dk),
                                          static_cast<Eigen::Index>(dk));
  for (Index c = 0; c < dt; ++c) {
    for (Index a = 0; a < dk; ++a) {
      const Complex va = state[kept_index[a] | traced_index[c]];
      if (va == Complex{}) continue;
      for (Index b = 0; b < dk; ++b) {
        rho(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) +=
            va * std::conj(state[kept_index[b] | traced_index[c]]);
      }
    }
  }
  return DensityMatrix(k, std::move(rho));
}

/// Von Neumann entropy in bits.
inline double entropy(const DensityMatrix& rho) {
  const Eigen::VectorXd lambda = rho.eigenvalues();
  double s = 0.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    const double l = lambda(i);
    if (l < -kAlgebraicTol) {
      throw std::domain_error("density matrix has negative eigenvalue " +
                              std::to_string(l));
    }
    if (l > 0.0) s -= l * std::log2(l);
  }
  return std::max(s, 0.0);
}

/// Trace distance 1/2 ||a - b||_1 from the eigenvalues of the Hermitian
/// difference.
inline double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::domain_error("trace distance between different sizes");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      a.entries() - b.entries(), Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace ghzbell
