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

#include "ghzbell/superdense.hpp"
#include "ghzbell/verify.hpp"
#include "test_support.hpp"

namespace ghzbell {
namespace {

using testing::max_abs_diff;

TEST(EncodePauli, LowBitIsPhaseFlipOnQubitTwo) {
  const auto p = encode_pauli(2, BitString::parse("00001"));
  EXPECT_EQ(p.to_string(), "Z2");
}

TEST(EncodePauli, HighBitIsBitFlipOnQubitFour) {
  EXPECT_EQ(encode_pauli(2, BitString::parse("10000")).to_string(), "X4");
}

TEST(EncodePauli, ZeroIsIdentity) {
  EXPECT_TRUE(encode_pauli(2, BitString::parse("00000")).is_identity());
}

TEST(EncodePauli, WrongLengthThrows) {
  EXPECT_THROW(encode_pauli(2, BitString::parse("0000")), std::domain_error);
  EXPECT_THROW(encode_pauli(0, BitString::parse("0")), std::domain_error);
}

TEST(EncodePauli, NeverTouchesBob) {
  for (int n = 1; n <= 3; ++n) {
    const auto parties = channel_teleport(n).parties;
    for (Index j = 0; j < (Index{1} << (2 * n + 1)); ++j) {
      for (int q : encode_pauli(n, BitString(2 * n + 1, j)).support()) {
        EXPECT_EQ(parties.owner(q), Party::alice);
      }
    }
  }
}

TEST(Encode, AllOnes) {
  // The printed form fixes the global sign; compare up to phase.
  const auto expected = ket_sum({{"00101", 1}, {"00110", -1}, {"11001", -1}, {"11010", 1}});
  EXPECT_NEAR(fidelity(encode(2, BitString::parse("11111")), expected), 1.0, 1e-12);
}

TEST(Encode, BitFlipsOnAlicesFirstTwoQubits) {
  const auto expected = ket_sum({{"00100", 1}, {"00111", 1}, {"11000", 1}, {"11011", 1}});
  EXPECT_LT(max_abs_diff(encode(2, BitString::parse("01100")), expected), 1e-15);
}

TEST(Encode, OrderOneZeroIsGhz) {
  EXPECT_EQ(encode(1, BitString::parse("000")), named_state(NamedState::xi_plus));
}

TEST(Decode, RoundTripIsExhaustive) {
  for (int n = 1; n <= 3; ++n) {
    const SuperdenseDecoder decoder(n);
    auto rng = make_rng(static_cast<std::uint64_t>(n));
    const int width = 2 * n + 1;
    for (Index j = 0; j < (Index{1} << width); ++j) {
      const BitString bits(width, j);
      EXPECT_EQ(decoder.decode(encode(n, bits), rng), bits) << bits.to_string();
    }
  }
}

TEST(Decode, SingleString) {
  auto rng = make_rng(0);
  EXPECT_EQ(decode(encode(1, BitString::parse("101")), 1, rng),
            BitString::parse("101"));
}

TEST(Decode, WrongRegisterSizeThrows) {
  auto rng = make_rng(0);
  EXPECT_THROW(decode(basis_state(3, 0), 2, rng), std::domain_error);
}

TEST(Encode, DistinctStringsGiveOrthogonalStates) {
  const auto basis = superdense_basis(3);
  const auto r = check_orthonormal(basis);
  EXPECT_TRUE(r.pass());
  EXPECT_LT(r.checks.front().measured, 1e-12);
}

TEST(CapacityCheck, CountsAndRatio) {
  for (int n = 1; n <= 3; ++n) {
    const auto cap = capacity_check(n);
    EXPECT_EQ(cap.num_states, Index{1} << (2 * n + 1));
    EXPECT_TRUE(cap.all_orthonormal);
    EXPECT_EQ(cap.alice_qubit_count, n + 1);
    EXPECT_TRUE(cap.alice_local);
    // (2N+1)/(N+1) as an exact rational.
    EXPECT_EQ(cap.bits, 2 * n + 1);
    EXPECT_EQ(cap.qubits_sent, n + 1);
  }
}

}  // namespace
}  // namespace ghzbell
