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

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "ghzbell/statevec.hpp"

namespace ghzbell {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20260101;
inline constexpr const char* kSeedEnvVar = "GHZBELL_SEED";

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed of the independent stream `stream` under `master`. Streams do not
/// depend on the order in which they are drawn, so trials can run in any order.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(splitmix64(master) ^ splitmix64(~stream));
}

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

/// Seed from GHZBELL_SEED when set and parseable, otherwise kDefaultSeed.
inline std::uint64_t default_seed() {
  if (const char* env = std::getenv(kSeedEnvVar)) {
    try {
      std::size_t used = 0;
      const std::string text(env);
      const auto value = std::stoull(text, &used, 0);
      if (used == text.size()) return value;
    } catch (const std::exception&) {
    }
  }
  return kDefaultSeed;
}

/// Haar-distributed pure state: i.i.d. standard complex normal amplitudes,
/// then normalized.
inline StateVector haar_random_state(int num_qubits, Rng& rng) {
  if (num_qubits < 1) throw std::domain_error("haar state needs >= 1 qubit");
  auto out = StateVector::zeros(num_qubits);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (auto& a : out.amplitudes()) {
    const double re = normal(rng);
    const double im = normal(rng);
    a = Complex{re, im};
  }
  return out.normalized();
}

inline double uniform01(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace ghzbell
