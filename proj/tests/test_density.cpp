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


#include <gtest/gtest.h>

#include "ghzbell/bases.hpp"
#include "ghzbell/density.hpp"
#include "test_support.hpp"

namespace ghzbell {
namespace {

using testing::haar;

double max_entry_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

const StateVector kZeta = channel_teleport(2).state;

TEST(PartialTrace, BobsTwoQubitsAreMaximallyMixed) {
  const auto rho = partial_trace(kZeta, {3, 5});
  EXPECT_LT(max_entry_diff(rho.entries(), ComplexMatrix::Identity(4, 4) / 4.0), 1e-12);
}

TEST(PartialTrace, LastQubitIsHalfIdentity) {
  const auto rho = partial_trace(kZeta, {5});
  EXPECT_LT(max_entry_diff(rho.entries(), ComplexMatrix::Identity(2, 2) / 2.0), 1e-12);
  EXPECT_NEAR(rho.entries().trace().real(), 1.0, 1e-12);
}

TEST(PartialTrace, KeepingEverythingGivesThePureProjector) {
  const auto bell = named_state(NamedState::psi_plus);
  const auto rho = partial_trace(bell, {1, 2});
  EXPECT_LT(max_entry_diff(rho.entries(), DensityMatrix::pure(bell).entries()), 1e-15);
}

TEST(PartialTrace, AlwaysAValidDensityMatrix) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto s = haar(5, seed);
    const auto rho = partial_trace(s, {2, 4});
    EXPECT_EQ(rho.num_qubits(), 2);
    EXPECT_GE(rho.eigenvalues().minCoeff(), -1e-12);
  }
}

TEST(PartialTrace, RejectsBadPositions) {
  EXPECT_THROW(partial_trace(kZeta, {}), std::domain_error);
  EXPECT_THROW(partial_trace(kZeta, {6}), std::domain_error);
}

TEST(Entropy, QuarterIdentityIsTwoBits) {
  EXPECT_NEAR(entropy(DensityMatrix::maximally_mixed(2)), 2.0, 1e-12);
}

TEST(Entropy, PureStateIsZero) {
  EXPECT_NEAR(entropy(DensityMatrix::pure(haar(3, 1))), 0.0, 1e-10);
}

TEST(Entropy, HalfIdentityIsOneBit) {
  EXPECT_NEAR(entropy(DensityMatrix::maximally_mixed(1)), 1.0, 1e-12);
}

TEST(Entropy, BoundedByQubitCount) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto s = haar(5, seed);
    for (const std::set<int>& keep :
         {std::set<int>{1}, std::set<int>{1, 3}, std::set<int>{2, 3, 5}}) {
      const double e = entropy(partial_trace(s, keep));
      EXPECT_GE(e, -1e-10);
      EXPECT_LE(e, static_cast<double>(keep.size()) + 1e-10);
    }
  }
}

TEST(Entropy, RejectsNegativeEigenvalues) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 1.5;
  m(1, 1) = -0.5;
  EXPECT_THROW(entropy(DensityMatrix(1, m)), std::domain_error);
}

TEST(DensityMatrix, ValidatesShapeHermiticityAndTrace) {
  EXPECT_THROW(DensityMatrix(1, ComplexMatrix::Identity(4, 4)), std::domain_error);
  ComplexMatrix skew = ComplexMatrix::Identity(2, 2) / 2.0;
  skew(0, 1) = 0.3;
  EXPECT_THROW(DensityMatrix(1, skew), std::domain_error);
  EXPECT_THROW(DensityMatrix(1, ComplexMatrix::Identity(2, 2)), std::domain_error);
}

TEST(TraceDistance, KnownValues) {
  const auto zero = DensityMatrix::pure(basis_state(1, 0));
  const auto one = DensityMatrix::pure(basis_state(1, 1));
  EXPECT_NEAR(trace_distance(zero, one), 1.0, 1e-12);
  EXPECT_NEAR(trace_distance(zero, zero), 0.0, 1e-12);
  EXPECT_NEAR(trace_distance(zero, DensityMatrix::maximally_mixed(1)), 0.5, 1e-12);
  EXPECT_THROW(trace_distance(zero, DensityMatrix::maximally_mixed(2)),
               std::domain_error);
}

}  // namespace
}  // namespace ghzbell
