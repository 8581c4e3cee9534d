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


#include <numbers>

#include <gtest/gtest.h>

#include "ghzbell/bases.hpp"
#include "ghzbell/density.hpp"
#include "ghzbell/superdense.hpp"
#include "ghzbell/verify.hpp"
#include "test_support.hpp"

namespace ghzbell {
namespace {

using testing::max_abs_diff;

TEST(NamedState, GhzAndBellDefinitions) {
  const double r = 1.0 / std::numbers::sqrt2;
  const auto xi = named_state("xi+");
  EXPECT_NEAR(xi[ket_index("000")].real(), r, 1e-15);
  EXPECT_NEAR(xi[ket_index("111")].real(), r, 1e-15);
  const auto phi = named_state(NamedState::phi_minus);
  EXPECT_NEAR(phi[ket_index("01")].real(), r, 1e-15);
  EXPECT_NEAR(phi[ket_index("10")].real(), -r, 1e-15);
}

TEST(NamedState, SignPartnersAreOrthogonal) {
  EXPECT_NEAR(std::abs(inner_product(named_state("chi+"), named_state("chi-"))),
              0.0, 1e-15);
}

TEST(NamedState, AllTwelveAreNormalizedAndRoundTripNames) {
  for (auto s : kAllNamedStates) {
    EXPECT_TRUE(named_state(s).is_normalized());
    EXPECT_EQ(named_state(name_of(s)), named_state(s));
  }
  EXPECT_THROW(named_state("zeta"), std::domain_error);
}

TEST(ChannelTeleport, FiveQubitChannel) {
  const auto ch = channel_teleport(2);
  const auto expected = ket_sum(
      {{"00000", 1}, {"00011", 1}, {"11100", 1}, {"11111", 1}});
  EXPECT_LT(max_abs_diff(ch.state, expected), 1e-15);
  EXPECT_EQ(ch.parties.positions_of(Party::alice), (std::vector<int>{1, 2, 4}));
  EXPECT_EQ(ch.parties.positions_of(Party::bob), (std::vector<int>{3, 5}));
}

TEST(ChannelTeleport, OrderOneIsTheGhzState) {
  const auto ch = channel_teleport(1);
  EXPECT_EQ(ch.state, named_state(NamedState::xi_plus));
  EXPECT_EQ(ch.parties.positions_of(Party::alice), (std::vector<int>{1, 2}));
  EXPECT_EQ(ch.parties.positions_of(Party::bob), (std::vector<int>{3}));
}

TEST(ChannelTeleport, OrderThreeHasEightEqualAmplitudes) {
  const auto ch = channel_teleport(3);
  EXPECT_EQ(ch.state.num_qubits(), 7);
  EXPECT_NEAR(ch.state.norm(), 1.0, 1e-12);
  int nonzero = 0;
  for (Index i = 0; i < ch.state.dimension(); ++i) {
    if (std::abs(ch.state[i]) > 1e-15) {
      ++nonzero;
      EXPECT_NEAR(std::abs(ch.state[i]), 1.0 / (2.0 * std::numbers::sqrt2), 1e-15);
    }
  }
  EXPECT_EQ(nonzero, 8);
}

TEST(ChannelTeleport, BobIsMaximallyEntangledWithAlice) {
  for (int n = 1; n <= 4; ++n) {
    const auto ch = channel_teleport(n);
    const auto bob = ch.parties.positions_of(Party::bob);
    const auto rho = partial_trace(ch.state, {bob.begin(), bob.end()});
    EXPECT_NEAR(entropy(rho), n, 1e-10) << "N=" << n;
  }
  EXPECT_NEAR(entropy(partial_trace(channel_teleport(2).state, {5})), 1.0, 1e-10);
}

TEST(ChannelTeleport, RejectsBadOrder) {
  EXPECT_THROW(channel_teleport(0), std::domain_error);
  EXPECT_THROW(channel_teleport(7), std::domain_error);
}

TEST(ChannelQis, ThreeWaySplit) {
  const auto ch = channel_qis(2);
  EXPECT_EQ(ch.state, channel_teleport(2).state);
  EXPECT_EQ(ch.parties.positions_of(Party::alice), (std::vector<int>{1, 4}));
  EXPECT_EQ(ch.parties.positions_of(Party::bob), (std::vector<int>{2}));
  EXPECT_EQ(ch.parties.positions_of(Party::charlie), (std::vector<int>{3, 5}));
}

TEST(ChannelQis, OrderOneGivesEachPartyOneQubit) {
  const auto ch = channel_qis(1);
  for (auto p : {Party::alice, Party::bob, Party::charlie}) {
    EXPECT_EQ(ch.parties.count(p), 1);
  }
}

TEST(ChannelQis, CharlieAloneSeesMaximallyMixedState) {
  const auto rho = partial_trace(channel_qis(2).state, {3, 5});
  EXPECT_LT((rho.entries() - ComplexMatrix::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff(),
            1e-12);
}

TEST(QisSingleAssignments, Ownership) {
  const auto a = qis_single_assignments();
  EXPECT_EQ(a[0].count(Party::alice), 1);
  EXPECT_EQ(a[1].positions_of(Party::bob), (std::vector<int>{3, 4}));
  EXPECT_EQ(a[2].count(Party::alice), 3);
  for (const auto& pa : a) EXPECT_EQ(pa.positions_of(Party::charlie), std::vector<int>{5});
}

TEST(BitString, ParseAndBits) {
  const auto b = BitString::parse("10000");
  EXPECT_EQ(b.value(), 16u);
  EXPECT_TRUE(b.bit(5));
  EXPECT_FALSE(b.bit(1));
  EXPECT_EQ(b.to_string(), "10000");
  EXPECT_THROW(BitString(3, 8), std::domain_error);
  EXPECT_THROW(BitString::parse("10a"), std::domain_error);
  EXPECT_THROW(b.bit(6), std::domain_error);
}

TEST(SuperdenseBasis, OrderTwoIsTheEncodedFamily) {
  const auto basis = superdense_basis(2);
  ASSERT_EQ(basis.size(), 32u);
  EXPECT_LT(max_abs_diff(basis[31], ket_sum({{"00101", 1}, {"00110", -1},
                                             {"11001", -1}, {"11010", 1}})),
            1e-15);
}

TEST(SuperdenseBasis, CompleteAndOrthonormal) {
  for (int n = 1; n <= 3; ++n) {
    const auto basis = superdense_basis(n);
    EXPECT_EQ(basis.size(), Index{1} << (2 * n + 1));
    EXPECT_TRUE(basis.is_complete());
    EXPECT_TRUE(check_orthonormal(basis).pass()) << "N=" << n;
  }
}

TEST(OmegaBasisTeleport, WorkedExampleTwelve) {
  const auto basis = omega_basis_teleport(2);
  EXPECT_LT(max_abs_diff(basis[12], ket_sum({{"11000", 1}, {"10001", 1},
                                             {"01110", 1}, {"00111", 1}})),
            1e-15);
  EXPECT_LT(max_abs_diff(basis[0], ket_sum({{"00000", 1}, {"01001", 1},
                                            {"10110", 1}, {"11111", 1}})),
            1e-15);
}

TEST(OmegaBasisTeleport, OrderOneIsPauliFamilyOfGhz) {
  const auto basis = omega_basis_teleport(1);
  ASSERT_EQ(basis.size(), 4u);
  const auto ghz = named_state(NamedState::xi_plus);
  const std::vector<PauliString> family = {
      PauliString(3), PauliString(3).add_z(1), PauliString(3).add_x(1),
      PauliString(3).add_z(1).add_x(1)};
  for (std::size_t j = 0; j < 4; ++j) {
    EXPECT_LT(max_abs_diff(basis[j], apply_pauli(ghz, family[j])), 1e-15);
  }
  EXPECT_TRUE(check_orthonormal(basis).pass());
}

TEST(OmegaBasisTeleport, SpansHalfTheSpace) {
  for (int n = 1; n <= 3; ++n) {
    const auto basis = omega_basis_teleport(n);
    EXPECT_EQ(basis.size(), Index{1} << (2 * n));
    EXPECT_EQ(basis.subset_size(), 2 * n + 1);
    EXPECT_FALSE(basis.is_complete());
    EXPECT_TRUE(check_orthonormal(basis).pass());
  }
}

TEST(OmegaBasisTeleport, ElementsArePaulisOfOmegaZero) {
  for (int n = 1; n <= 3; ++n) {
    const auto basis = omega_basis_teleport(n);
    // Independent construction of Omega_0 by writing the product's kets.
    const auto omega0 = permute(
        tensor(named_state(NamedState::xi_plus),
               tensor_power(named_state(NamedState::psi_plus), n - 1)),
        omega_placement_teleport(n));
    for (Index j = 0; j < basis.size(); ++j) {
      PauliString p(2 * n + 1);
      for (int k = 1; k <= n; ++k) {
        if (j & (Index{1} << (k - 1))) p.add_z(k);
        if (j & (Index{1} << (k - 1 + n))) p.add_x(k);
      }
      EXPECT_LT(max_abs_diff(basis[j], apply_pauli(omega0, p)), 1e-15);
    }
  }
}

TEST(OmegaPlacement, OrderTwo) {
  EXPECT_EQ(omega_placement_teleport(2).placement(),
            (std::vector<int>{1, 4, 3, 2, 5}));
  EXPECT_EQ(omega_placement_teleport(3).placement(),
            (std::vector<int>{1, 5, 4, 2, 6, 3, 7}));
}

TEST(OmegaBasisQis, FirstElements) {
  EXPECT_LT(max_abs_diff(omega_basis_qis(2)[0],
                         ket_sum({{"0000", 1}, {"0101", 1}, {"1010", 1}, {"1111", 1}})),
            1e-15);
  EXPECT_EQ(omega_basis_qis(1)[0], named_state(NamedState::psi_plus));
}

TEST(OmegaBasisQis, CompleteAndOrthonormal) {
  for (int n = 1; n <= 3; ++n) {
    const auto basis = omega_basis_qis(n);
    EXPECT_TRUE(basis.is_complete());
    EXPECT_TRUE(check_orthonormal(basis).pass());
  }
}

TEST(OmegaPauli, RejectsOutOfRangeIndex) {
  EXPECT_THROW(omega_pauli(2, 16, 2), std::domain_error);
}

TEST(FixedBases, SizesAndOrthonormality) {
  EXPECT_EQ(fivequbit_basis().size(), 4u);
  EXPECT_EQ(fivequbit_basis().subset_size(), 5);
  EXPECT_EQ(four_particle_basis().size(), 8u);
  EXPECT_EQ(four_particle_basis().subset_size(), 4);
  EXPECT_EQ(three_particle_basis().size(), 8u);
  EXPECT_NEAR(std::abs(inner_product(hadamard_basis()[0], hadamard_basis()[1])),
              0.0, 1e-15);
  for (const auto& b : fixed_bases()) {
    EXPECT_TRUE(check_orthonormal(b).pass()) << b.label();
  }
}

TEST(PartyAssignment, PrefixShiftsPositions) {
  const auto a = channel_qis(2).parties.with_prefix(2, Party::alice);
  EXPECT_EQ(a.positions_of(Party::alice), (std::vector<int>{1, 2, 3, 6}));
  EXPECT_EQ(a.positions_of(Party::bob), (std::vector<int>{4}));
  EXPECT_EQ(a.owner(7), Party::charlie);
  EXPECT_THROW(a.owner(8), std::domain_error);
}

}  // namespace
}  // namespace ghzbell
