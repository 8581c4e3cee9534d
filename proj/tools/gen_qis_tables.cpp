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


// Regenerates include/ghzbell/qis_tables.hpp from an exhaustive Pauli search
// over Charlie's qubits.
//
//   gen_qis_tables > include/ghzbell/qis_tables.hpp

#include <iostream>
#include <sstream>

#include "ghzbell/qis.hpp"

namespace {

constexpr const char* kLicense = R"(// Copyright 2026 The ghzbell Authors
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
)";

std::string single_block() {
  using ghzbell::QisProtocol;
  std::ostringstream out;
  out << "/// [protocol i, ii, iii][Alice outcome][Bob outcome] -> Charlie's\n"
         "/// correction: -1 unreachable, else bit 0 = X, bit 1 = Z.\n"
         "inline constexpr std::array<std::array<std::array<std::int8_t, 4>, 8>, 3>\n"
         "    kQisSingleCorrections = {{\n";
  for (auto p : {QisProtocol::i, QisProtocol::ii, QisProtocol::iii}) {
    const auto table = ghzbell::derive_correction_table(p);
    out << "        {{  // " << ghzbell::to_string(p) << "\n";
    for (std::size_t a = 0; a < 8; ++a) {
      out << "            {";
      for (std::size_t b = 0; b < 4; ++b) {
        const auto it = table.entries.find({a, b});
        int code = -1;
        if (it != table.entries.end()) {
          code = (it->second.has_x(1) ? 1 : 0) | (it->second.has_z(1) ? 2 : 0);
        }
        out << (b ? ", " : "") << code;
      }
      out << "},\n";
    }
    out << "        }},\n";
  }
  out << "}};\n";
  return out.str();
}

std::string two_block() {
  const auto table = ghzbell::derive_correction_table(ghzbell::QisProtocol::two);
  std::ostringstream out;
  out << "/// [Alice outcome j][Bob outcome] -> {X mask, Z mask} over Charlie's two\n"
         "/// qubits, qubit 1 in the high bit.\n"
         "inline constexpr std::array<std::array<std::array<std::uint8_t, 2>, 2>, 16>\n"
         "    kQisTwoCorrections = {{\n";
  for (std::size_t a = 0; a < 16; ++a) {
    out << "    {{";
    for (std::size_t b = 0; b < 2; ++b) {
      const auto& c = table.entries.at({a, b});
      out << (b ? ", " : "") << "{" << c.x_mask() << ", " << c.z_mask() << "}";
    }
    out << "}},  // " << a << "\n";
  }
  out << "}};\n";
  return out.str();
}

}  // namespace

int main() {
  try {
    std::cout << kLicense << "\n// Generated by tools/gen_qis_tables. Do not edit.\n\n"
              << "#pragma once\n\n#include <array>\n#include <cstdint>\n\n"
              << "namespace ghzbell {\n\n"
              << single_block() << "\n"
              << two_block() << "\n"
              << "}  // namespace ghzbell\n";
  } catch (const std::exception& e) {
    std::cerr << "gen_qis_tables: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
