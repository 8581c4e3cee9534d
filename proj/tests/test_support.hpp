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

#include <fstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ghzbell/random.hpp"
#include "ghzbell/statevec.hpp"
#include "ghzbell/tables.hpp"

namespace ghzbell::testing {

inline std::vector<std::string> golden_lines(const std::string& name) {
  std::ifstream in(std::string(GHZBELL_GOLDEN_DIR) + "/" + name);
  EXPECT_TRUE(in.good()) << "missing golden file " << name;
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

/// Row cells joined with " | ", empty cells dropped.
inline std::vector<std::string> rendered_rows(const Table& t) {
  std::vector<std::string> out;
  for (const auto& row : t.rows) {
    std::string line;
    for (const auto& cell : row.cells) {
      if (cell.empty()) continue;
      line += (line.empty() ? "" : " | ") + cell;
    }
    out.push_back(line);
  }
  return out;
}

inline StateVector haar(int n, std::uint64_t seed) {
  auto rng = make_rng(seed);
  return haar_random_state(n, rng);
}

/// Largest |a_i - b_i|.
inline double max_abs_diff(const StateVector& a, const StateVector& b) {
  double worst = 0.0;
  for (Index i = 0; i < a.dimension(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

/// Sum of c_i |k_i> with explicit (unnormalized) complex weights.
inline StateVector weighted(int n, std::vector<std::pair<std::string, Complex>> terms) {
  auto out = StateVector::zeros(n);
  for (const auto& [bits, c] : terms) out[ket_index(bits)] += c;
  return out;
}

}  // namespace ghzbell::testing
