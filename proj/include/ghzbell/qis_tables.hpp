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

// Generated by tools/gen_qis_tables. Do not edit.

#pragma once

#include <array>
#include <cstdint>

namespace ghzbell {

/// [protocol i, ii, iii][Alice outcome][Bob outcome] -> Charlie's
/// correction: -1 unreachable, else bit 0 = X, bit 1 = Z.
inline constexpr std::array<std::array<std::array<std::int8_t, 4>, 8>, 3>
    kQisSingleCorrections = {{
        {{  // i
            {0, 1, 2, 3},
            {2, 3, 0, 1},
            {1, 0, 3, 2},
            {3, 2, 1, 0},
            {-1, -1, -1, -1},
            {-1, -1, -1, -1},
            {-1, -1, -1, -1},
            {-1, -1, -1, -1},
        }},
        {{  // ii
            {0, 2, 1, 3},
            {2, 0, 3, 1},
            {1, 3, 0, 2},
            {3, 1, 2, 0},
            {-1, -1, -1, -1},
            {-1, -1, -1, -1},
            {-1, -1, -1, -1},
            {-1, -1, -1, -1},
        }},
        {{  // iii
            {0, 2, -1, -1},
            {2, 0, -1, -1},
            {0, 2, -1, -1},
            {2, 0, -1, -1},
            {1, 3, -1, -1},
            {3, 1, -1, -1},
            {1, 3, -1, -1},
            {3, 1, -1, -1},
        }},
}};

/// [Alice outcome j][Bob outcome] -> {X mask, Z mask} over Charlie's two
/// qubits, qubit 1 in the high bit.
inline constexpr std::array<std::array<std::array<std::uint8_t, 2>, 2>, 16>
    kQisTwoCorrections = {{
    {{{0, 0}, {0, 2}}},  // 0
    {{{0, 2}, {0, 0}}},  // 1
    {{{0, 1}, {0, 3}}},  // 2
    {{{0, 3}, {0, 1}}},  // 3
    {{{2, 0}, {2, 2}}},  // 4
    {{{2, 2}, {2, 0}}},  // 5
    {{{2, 1}, {2, 3}}},  // 6
    {{{2, 3}, {2, 1}}},  // 7
    {{{1, 0}, {1, 2}}},  // 8
    {{{1, 2}, {1, 0}}},  // 9
    {{{1, 1}, {1, 3}}},  // 10
    {{{1, 3}, {1, 1}}},  // 11
    {{{3, 0}, {3, 2}}},  // 12
    {{{3, 2}, {3, 0}}},  // 13
    {{{3, 1}, {3, 3}}},  // 14
    {{{3, 3}, {3, 1}}},  // 15
}};

}  // namespace ghzbell
