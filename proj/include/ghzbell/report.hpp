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
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ghzbell/tables.hpp"
#include "ghzbell/verify.hpp"

namespace ghzbell {

enum class OutputFormat { json, csv, text };

inline OutputFormat parse_format(std::string_view text) {
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  if (text == "text") return OutputFormat::text;
  throw std::domain_error("unknown output format '" + std::string(text) + "'");
}

struct RunConfig {
  std::string command;
  int n = 2;
  std::string protocol;
  int trials = 10;
  std::uint64_t seed = kDefaultSeed;
  bool enumerate = false;
  OutputFormat format = OutputFormat::json;
  std::string output;
  /// Test hook for `verify`: swaps in a basis with a repeated element.
  bool inject_corrupt_basis = false;
};

using ReportItem = std::variant<VerificationReport, Table>;

struct Report {
  std::string command;
  RunConfig config;
  std::vector<ReportItem> results;

  bool pass() const {
    for (const auto& item : results) {
      if (const auto* r = std::get_if<VerificationReport>(&item)) {
        if (!r->pass()) return false;
      }
    }
    return true;
  }
};

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline nlohmann::ordered_json kets_json(const StateVector& s) {
  auto out = nlohmann::ordered_json::array();
  for (Index i = 0; i < s.dimension(); ++i) {
    if (s[i] == Complex{}) continue;
    out.push_back({{"amp", {s[i].real(), s[i].imag()}},
                   {"basis", ket_label(i, s.num_qubits())}});
  }
  return out;
}

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"measured", c.measured},
                      {"bound", c.bound},
                      {"pass", c.pass}});
  }
  return {{"type", "report"}, {"suite", r.suite}, {"pass", r.pass()},
          {"checks", std::move(checks)}};
}

inline nlohmann::ordered_json to_json(const Table& t) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json entry = {{"cells", row.cells}};
    if (!row.states.empty()) {
      nlohmann::ordered_json states = nlohmann::ordered_json::object();
      for (const auto& [name, s] : row.states) states[name] = kets_json(s);
      entry["states"] = std::move(states);
    }
    rows.push_back(std::move(entry));
  }
  return {{"type", "table"}, {"name", t.name}, {"columns", t.columns},
          {"rows", std::move(rows)}};
}

inline std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::text: return "text";
  }
  return "?";
}

inline nlohmann::ordered_json to_json(const Report& report) {
  const auto& c = report.config;
  nlohmann::ordered_json config = {{"n", c.n},
                                   {"protocol", c.protocol},
                                   {"trials", c.trials},
                                   {"seed", c.seed},
                                   {"enumerate", c.enumerate},
                                   {"format", to_string(c.format)}};
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const auto& item : report.results) {
    results.push_back(std::visit([](const auto& x) { return to_json(x); }, item));
  }
  return {{"command", report.command}, {"config", std::move(config)},
          {"results", std::move(results)}, {"pass", report.pass()}};
}

// ---------------------------------------------------------------------------
// CSV and text
// ---------------------------------------------------------------------------

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

inline std::string number(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

}  // namespace detail

/// One check per row.
inline std::string to_csv(const Report& report) {
  std::string out = "suite,check,measured,bound,pass\n";
  for (const auto& item : report.results) {
    const auto* r = std::get_if<VerificationReport>(&item);
    if (!r) continue;
    for (const auto& c : r->checks) {
      out += detail::csv_field(r->suite) + "," + detail::csv_field(c.name) + "," +
             detail::number(c.measured) + "," + detail::number(c.bound) + "," +
             (c.pass ? "true" : "false") + "\n";
    }
  }
  return out;
}

inline std::string to_text(const Report& report) {
  std::string out = report.command + ": " + (report.pass() ? "PASS" : "FAIL") + "\n";
  for (const auto& item : report.results) {
    if (const auto* r = std::get_if<VerificationReport>(&item)) {
      out += "\n[" + r->suite + "] " + (r->pass() ? "PASS" : "FAIL") + "\n";
      for (const auto& c : r->checks) {
        out += std::string("  ") + (c.pass ? "ok   " : "FAIL ") + c.name + " = " +
               detail::number(c.measured) + " (bound " + detail::number(c.bound) +
               ")\n";
      }
    } else {
      const auto& t = std::get<Table>(item);
      out += "\n[" + t.name + "]\n";
      for (const auto& row : t.rows) {
        std::string line;
        for (const auto& cell : row.cells) {
          if (cell.empty()) continue;
          line += (line.empty() ? "" : " | ") + cell;
        }
        out += "  " + line + "\n";
      }
    }
  }
  return out;
}

inline std::string render(const Report& report) {
  switch (report.config.format) {
    case OutputFormat::json: return to_json(report).dump(2) + "\n";
    case OutputFormat::csv: return to_csv(report);
    case OutputFormat::text: return to_text(report);
  }
  return {};
}

}  // namespace ghzbell
