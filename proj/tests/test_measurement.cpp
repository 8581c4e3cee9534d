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
#include "ghzbell/measurement.hpp"
#include "ghzbell/random.hpp"
#include "test_support.hpp"

namespace ghzbell {
namespace {

using testing::haar;
using testing::max_abs_diff;

MeasurementBasis computational(int n) {
  std::vector<StateVector> e;
  for (Index i = 0; i < (Index{1} << n); ++i) e.push_back(basis_state(n, i));
  return MeasurementBasis("computational", std::move(e));
}

TEST(MeasureInBasis, FiveQubitTeleportOutcomesAreUniform) {
  const Complex alpha{0.6, 0.0};
  const Complex beta{0.0, 0.8};
  const StateVector input(1, {alpha, beta});
  const auto combined = tensor(input, channel_teleport(2).state);
  const std::vector<int> alice = {1, 2, 3, 4, 5};
  const auto basis = fivequbit_basis();
  // Bob's qubit for each outcome, before correction.
  const std::vector<StateVector> bob = {
      StateVector(1, {alpha, beta}), StateVector(1, {alpha, -beta}),
      StateVector(1, {beta, alpha}), StateVector(1, {-beta, alpha})};
  for (std::size_t k = 0; k < 4; ++k) {
    const auto out = collapse(combined, alice, basis, k);
    EXPECT_NEAR(out.probability, 0.25, 1e-12);
    EXPECT_NEAR(fidelity(out.post, bob[k]), 1.0, 1e-12);
  }
}

TEST(MeasureInBasis, DefiniteOutcome) {
  auto rng = make_rng(1);
  const auto out = measure_in_basis(basis_state(2, 0), std::vector<int>{1, 2},
                                    computational(2), rng);
  EXPECT_EQ(out.index, 0u);
  EXPECT_NEAR(out.probability, 1.0, 1e-15);
  EXPECT_EQ(out.post.num_qubits(), 0);
}

TEST(MeasureInBasis, BellPairInHadamardBasis) {
  const auto bell = named_state(NamedState::psi_plus);
  const auto had = hadamard_basis();
  for (std::size_t k = 0; k < 2; ++k) {
    const auto out = collapse(bell, std::vector<int>{1}, had, k);
    EXPECT_NEAR(out.probability, 0.5, 1e-12);
    EXPECT_NEAR(fidelity(out.post, had[k]), 1.0, 1e-12);
  }
  auto rng = make_rng(3);
  int seen[2] = {0, 0};
  for (int i = 0; i < 200; ++i) {
    ++seen[measure_in_basis(bell, std::vector<int>{1}, had, rng).index];
  }
  EXPECT_GT(seen[0], 50);
  EXPECT_GT(seen[1], 50);
}

TEST(MeasureInBasis, SameSeedSameOutcome) {
  const auto s = haar(4, 11);
  const auto basis = bell_basis();
  auto a = make_rng(99);
  auto b = make_rng(99);
  for (int i = 0; i < 20; ++i) {
    EXPECT_EQ(measure_in_basis(s, std::vector<int>{2, 4}, basis, a).index,
              measure_in_basis(s, std::vector<int>{2, 4}, basis, b).index);
  }
}

TEST(ProjectAll, CompleteBasisProbabilitiesSumToOne) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto s = haar(5, seed);
    for (const auto& [basis, subset] :
         {std::pair{bell_basis(), std::vector<int>{3, 1}},
          std::pair{three_particle_basis(), std::vector<int>{5, 2, 4}}}) {
      const auto proj = project_all(s, subset, basis);
      double total = 0.0;
      for (double w : proj.weights) total += w;
      EXPECT_NEAR(total, 1.0, 1e-10) << basis.label();
      EXPECT_LT(proj.out_of_span, 1e-10);
    }
  }
}

TEST(ProjectAll, ResidualsFollowSubsetOrder) {
  // |0>_1 |1>_2 |0>_3 measured on (3, 1): subset-local "00", residual |1>.
  const auto s = basis_state(3, ket_index("010"));
  const auto proj = project_all(s, std::vector<int>{3, 1}, computational(2));
  EXPECT_NEAR(proj.weights[0], 1.0, 1e-15);
  EXPECT_LT(max_abs_diff(proj.residuals[0], basis_state(1, 1)), 1e-15);
}

TEST(Collapse, IncompleteBasisOutsideSupportReportsResidual) {
  // ghz_pair spans half of the 3-qubit space; |010> lies outside it.
  const auto s = basis_state(3, ket_index("010"));
  try {
    collapse(s, std::vector<int>{1, 2, 3}, ghz_pair_basis(), 0);
    FAIL() << "expected ProtocolError";
  } catch (const ProtocolError& e) {
    EXPECT_NE(std::string(e.what()).find("residual norm"), std::string::npos);
  }
}

TEST(Collapse, RejectsNonOrthonormalBasisAndUnnormalizedState) {
  const MeasurementBasis bad("bad", {basis_state(1, 0), ket_sum({{"0", 1}, {"1", 1}})});
  EXPECT_FALSE(bad.is_orthonormal());
  EXPECT_THROW(collapse(basis_state(1, 0), std::vector<int>{1}, bad, 0),
               std::domain_error);
  EXPECT_THROW(collapse(basis_state(1, 0).scaled(2.0), std::vector<int>{1},
                        hadamard_basis(), 0),
               std::domain_error);
}

TEST(Collapse, ZeroProbabilityOutcomeThrows) {
  EXPECT_THROW(collapse(basis_state(1, 0), std::vector<int>{1}, computational(1), 1),
               ProtocolError);
}

TEST(MeasurementBasis, ValidatesElements) {
  EXPECT_THROW(MeasurementBasis("empty", {}), std::domain_error);
  EXPECT_THROW(MeasurementBasis("mixed", {basis_state(1, 0), basis_state(2, 0)}),
               std::domain_error);
  EXPECT_THROW(MeasurementBasis("too many", {basis_state(1, 0), basis_state(1, 1),
                                             basis_state(1, 0)}),
               std::domain_error);
  EXPECT_TRUE(computational(3).is_complete());
  EXPECT_FALSE(ghz_pair_basis().is_complete());
}

TEST(SubsetLayout, RejectsRepeatedOrOutOfRangePositions) {
  const auto s = basis_state(3, 0);
  EXPECT_THROW(project_all(s, std::vector<int>{1, 1}, bell_basis()), std::domain_error);
  EXPECT_THROW(project_all(s, std::vector<int>{1, 4}, bell_basis()), std::domain_error);
  EXPECT_THROW(project_all(s, std::vector<int>{1}, bell_basis()), std::domain_error);
}

}  // namespace
}  // namespace ghzbell
