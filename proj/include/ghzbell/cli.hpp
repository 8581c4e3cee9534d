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


// Command layer behind the `ghzbell` executable. Each command turns a
// RunConfig into a Report; `run_cli` adds argument parsing, output and exit
// codes so the whole front end can be driven in-process.

#pragma once

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ghzbell/qis.hpp"
#include "ghzbell/report.hpp"
#include "ghzbell/superdense.hpp"
#include "ghzbell/tables.hpp"
#include "ghzbell/teleport.hpp"
#include "ghzbell/verify.hpp"

namespace ghzbell {

enum ExitCode : int { kExitPass = 0, kExitFailure = 1, kExitUsage = 2 };

/// Invalid configuration; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Largest N the superdense commands accept; the decoder basis has 2^(2N+1)
/// elements.
inline constexpr int kMaxSuperdenseOrder = 5;

inline void validate(const RunConfig& c) {
  if (c.n < 1) throw UsageError("--n must be >= 1");
  if (c.trials < 1) throw UsageError("--trials must be >= 1");
  if (3 * c.n + 1 > kMaxQubits) {
    throw UsageError("--n " + std::to_string(c.n) + " exceeds the " +
                     std::to_string(kMaxQubits) + "-qubit simulation limit");
  }
  if (c.command == "superdense" && c.n > kMaxSuperdenseOrder) {
    throw UsageError("superdense supports --n up to " +
                     std::to_string(kMaxSuperdenseOrder));
  }
  if (c.command == "teleport" && c.protocol != "n" && c.protocol != "fivequbit" &&
      c.protocol != "two") {
    throw UsageError("teleport --protocol must be n, fivequbit or two");
  }
  if (c.command == "qis") {
    try {
      parse_qis_protocol(c.protocol);
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    }
  }
}

namespace detail {

inline StateVector trial_input(const RunConfig& c, int qubits, int trial) {
  auto rng = make_rng(derive_seed(c.seed, static_cast<std::uint64_t>(trial)));
  return haar_random_state(qubits, rng);
}

inline std::uint64_t trial_run_seed(const RunConfig& c, int trial) {
  return derive_seed(derive_seed(c.seed, static_cast<std::uint64_t>(trial)), 1);
}

inline std::string join_outcomes(const std::vector<std::size_t>& o) {
  std::string out;
  for (auto k : o) out += (out.empty() ? "" : ",") + std::to_string(k);
  return out;
}

struct BranchStats {
  double min_fidelity = 1.0;
  double max_count_deviation = 0.0;
  std::vector<double> max_stage_deviation;
};

/// Enumerates every branch for every trial input and summarizes fidelity and
/// per-round outcome uniformity.
inline BranchStats branch_stats(const ProtocolPlan& plan, const RunConfig& c,
                                std::size_t expected_branches,
                                const std::vector<double>& uniform_stage_prob) {
  BranchStats s;
  s.max_stage_deviation.assign(uniform_stage_prob.size(), 0.0);
  for (int t = 0; t < c.trials; ++t) {
    const auto input = trial_input(c, plan.input_qubits, t);
    const auto branches = enumerate_branches(plan, input);
    s.max_count_deviation = std::max(
        s.max_count_deviation,
        std::abs(static_cast<double>(branches.size()) -
                 static_cast<double>(expected_branches)));
    for (const auto& b : branches) {
      s.min_fidelity = std::min(s.min_fidelity, b.fidelity);
      for (std::size_t k = 0; k < b.stage_probabilities.size(); ++k) {
        s.max_stage_deviation[k] =
            std::max(s.max_stage_deviation[k],
                     std::abs(b.stage_probabilities[k] - uniform_stage_prob[k]));
      }
    }
  }
  return s;
}

/// Samples one run per trial; returns the worst fidelity and a transcript
/// table.
inline std::pair<double, Table> sampled_runs(const ProtocolPlan& plan,
                                             const RunConfig& c) {
  Table t{"transcripts_" + plan.id,
          {"trial", "outcomes", "messages", "correction", "label"},
          {}};
  double worst = 1.0;
  for (int k = 0; k < c.trials; ++k) {
    const auto input = trial_input(c, plan.input_qubits, k);
    const auto tr = run_protocol(plan, input, trial_run_seed(c, k));
    worst = std::min(worst, tr.fidelity);
    std::string messages;
    for (const auto& m : tr.classical_messages) {
      messages += (messages.empty() ? "" : " ") +
                  std::string(to_string(m.sender)) + "->" +
                  std::string(to_string(m.receiver)) + ":" + m.payload_bits();
    }
    t.rows.push_back({{std::to_string(k), join_outcomes(tr.outcome_indices),
                       messages, tr.corrections.front().to_string(), tr.label},
                      {}});
  }
  return {worst, std::move(t)};
}

inline int plan_cbits(const ProtocolPlan& plan) {
  int total = 0;
  for (const auto& st : plan.stages) total += st.cbits;
  return total;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

inline Report cmd_superdense(const RunConfig& c) {
  validate(c);
  Report report{"superdense", c, {}};
  const int width = 2 * c.n + 1;
  const SuperdenseDecoder decoder(c.n);
  auto rng = make_rng(c.seed);

  VerificationReport roundtrip{"roundtrip_N" + std::to_string(c.n), {}};
  int passed = 0;
  for (Index j = 0; j < (Index{1} << width); ++j) {
    const BitString bits(width, j);
    const bool ok = decoder.decode(encode(c.n, bits), rng) == bits;
    passed += ok ? 1 : 0;
    roundtrip.add(at_most("roundtrip_" + bits.to_string(), ok ? 0.0 : 1.0, 0.0));
  }
  roundtrip.add(near("roundtrips_passed", passed,
                     static_cast<double>(Index{1} << width), 0.0));
  report.results.emplace_back(std::move(roundtrip));

  const auto cap = capacity_check(c.n);
  VerificationReport capacity{"capacity_N" + std::to_string(c.n), {}};
  capacity.add(near("distinct_states", static_cast<double>(cap.num_states),
                    static_cast<double>(Index{1} << width), 0.0));
  capacity.merge(check_orthonormal(decoder.basis()));
  capacity.add(at_least("alice_local", cap.alice_local ? 1.0 : 0.0, 1.0));
  capacity.add(near("bits_per_qubit_sent",
                    static_cast<double>(cap.bits) / cap.qubits_sent,
                    static_cast<double>(width) / (c.n + 1), 0.0));
  report.results.emplace_back(std::move(capacity));

  if (c.n == 2) report.results.emplace_back(superdense_table(2));
  return report;
}

inline Report cmd_teleport(const RunConfig& c) {
  validate(c);
  Report report{"teleport", c, {}};
  ProtocolPlan plan;
  std::size_t branches = 0;
  if (c.protocol == "fivequbit") {
    plan = fivequbit_plan();
    branches = 4;
  } else {
    const int n = c.protocol == "two" ? 2 : c.n;
    plan = teleport_plan(n);
    if (c.protocol == "two") plan.id = "teleport_2";
    branches = Index{1} << (2 * n);
  }

  VerificationReport r{plan.id, {}};
  r.add(near("cbits", detail::plan_cbits(plan),
             c.protocol == "fivequbit" ? 2.0 : 2.0 * plan.n, 0.0));
  if (c.enumerate) {
    const auto s = detail::branch_stats(
        plan, c, branches, {1.0 / static_cast<double>(branches)});
    r.add(at_least("min_fidelity", s.min_fidelity, 1.0 - kAlgebraicTol));
    r.add(at_most("branch_count_deviation", s.max_count_deviation, 0.0));
    r.add(at_most("outcome_probability_deviation", s.max_stage_deviation[0],
                  kAlgebraicTol));
    report.results.emplace_back(std::move(r));
  } else {
    auto [worst, transcripts] = detail::sampled_runs(plan, c);
    r.add(at_least("min_fidelity", worst, 1.0 - kAlgebraicTol));
    report.results.emplace_back(std::move(r));
    report.results.emplace_back(std::move(transcripts));
  }
  if (c.protocol == "fivequbit") {
    report.results.emplace_back(fivequbit_table());
  } else if (plan.n <= 3) {
    report.results.emplace_back(teleport_table(plan.n));
  }
  return report;
}

inline Report cmd_qis(const RunConfig& c) {
  validate(c);
  const auto p = parse_qis_protocol(c.protocol);
  Report report{"qis", c, {}};
  const int n = p == QisProtocol::two ? 2 : c.n;
  const auto plan = qis_plan(p, n);

  std::size_t alice_outcomes = 0;
  std::size_t bob_outcomes = 0;
  switch (p) {
    case QisProtocol::i: alice_outcomes = 4; bob_outcomes = 4; break;
    case QisProtocol::ii: alice_outcomes = 4; bob_outcomes = 4; break;
    case QisProtocol::iii: alice_outcomes = 8; bob_outcomes = 2; break;
    default: alice_outcomes = Index{1} << (2 * n); bob_outcomes = 2; break;
  }

  VerificationReport r{plan.id, {}};
  const double expected_cbits =
      p == QisProtocol::iii ? 4.0 : (is_single(p) ? 4.0 : 2.0 * n + 1);
  r.add(near("cbits", detail::plan_cbits(plan), expected_cbits, 0.0));
  if (c.enumerate) {
    const auto s = detail::branch_stats(
        plan, c, alice_outcomes * bob_outcomes,
        {1.0 / static_cast<double>(alice_outcomes),
         1.0 / static_cast<double>(bob_outcomes)});
    r.add(at_least("min_fidelity", s.min_fidelity, 1.0 - kAlgebraicTol));
    r.add(at_most("branch_count_deviation", s.max_count_deviation, 0.0));
    r.add(at_most("alice_outcome_probability_deviation",
                  s.max_stage_deviation[0], kAlgebraicTol));
    r.add(at_most("bob_outcome_probability_deviation", s.max_stage_deviation[1],
                  kAlgebraicTol));

    // Shipped correction against a fresh exhaustive search, every branch.
    int mismatches = 0;
    const auto input = detail::trial_input(c, plan.input_qubits, 0);
    for (const auto& b : enumerate_branches(plan, input)) {
      std::vector<int> charlie(static_cast<std::size_t>(b.received.num_qubits()));
      std::iota(charlie.begin(), charlie.end(), 1);
      const auto found = search_correction(input, charlie, b.received);
      if (!found || !(*found == b.correction)) ++mismatches;
    }
    r.add(at_most("correction_search_mismatches", mismatches, 0.0));
    report.results.emplace_back(std::move(r));
  } else {
    auto [worst, transcripts] = detail::sampled_runs(plan, c);
    r.add(at_least("min_fidelity", worst, 1.0 - kAlgebraicTol));
    report.results.emplace_back(std::move(r));
    report.results.emplace_back(std::move(transcripts));
  }

  report.results.emplace_back(
      secrecy_check(c.protocol, n, std::max(c.trials, 2), c.seed));
  report.results.emplace_back(correction_table(p, n));
  if (p == QisProtocol::i) {
    report.results.emplace_back(qis_i_alice_table());
    report.results.emplace_back(qis_i_bob_table());
  } else if (p == QisProtocol::two) {
    report.results.emplace_back(qis_two_table());
  }
  return report;
}

namespace detail {

inline MeasurementBasis corrupted(const MeasurementBasis& b) {
  auto elements = b.elements();
  elements[1] = elements[0];
  return MeasurementBasis(b.label() + "_corrupted", std::move(elements));
}

}  // namespace detail

inline Report cmd_verify(const RunConfig& c) {
  validate(c);
  Report report{"verify", c, {}};

  VerificationReport ortho{"orthonormality", {}};
  for (const auto& b : fixed_bases()) ortho.merge(check_orthonormal(b));
  for (int m = 1; m <= c.n; ++m) {
    ortho.merge(check_orthonormal(omega_basis_teleport(m)));
    ortho.merge(check_orthonormal(omega_basis_qis(m)));
    if (m <= kMaxSuperdenseOrder) ortho.merge(check_orthonormal(superdense_basis(m)));
  }
  if (c.inject_corrupt_basis) {
    ortho.merge(check_orthonormal(detail::corrupted(omega_basis_teleport(1))));
  }
  report.results.emplace_back(std::move(ortho));

  const auto zeta = channel_teleport(2).state;
  report.results.emplace_back(entanglement_report(zeta, {1, 2, 4}));
  report.results.emplace_back(entanglement_report(zeta, {1, 2, 3, 4}));
  for (int m = 1; m <= c.n; ++m) {
    const auto ch = channel_teleport(m);
    const auto bob = ch.parties.positions_of(Party::bob);
    auto r = entanglement_report(ch.state, {bob.begin(), bob.end()});
    r.suite = "channel_N" + std::to_string(m) + "_" + r.suite;
    report.results.emplace_back(std::move(r));
  }

  VerificationReport completeness{"completeness", {}};
  for (int m = 1; m <= c.n; ++m) {
    const auto plan = teleport_plan(m);
    const auto& st = plan.stages.front();
    const auto combined =
        tensor(detail::trial_input(c, m, m), plan.channel);
    const auto d = decompose(combined, st.subset, st.basis);
    const auto back =
        reassemble(d, st.subset, st.basis, combined.num_qubits());
    double dev = 0.0;
    for (Index i = 0; i < back.dimension(); ++i) {
      dev = std::max(dev, std::abs(back[i] - combined[i]));
    }
    completeness.add(at_most("teleport_N" + std::to_string(m) + "_reassembly",
                             dev, kAlgebraicTol));
    completeness.add(at_most("teleport_N" + std::to_string(m) + "_out_of_span",
                             d.out_of_span, kAlgebraicTol));
  }
  report.results.emplace_back(std::move(completeness));
  return report;
}

inline Report run_command(const RunConfig& c) {
  if (c.command == "superdense") return cmd_superdense(c);
  if (c.command == "teleport") return cmd_teleport(c);
  if (c.command == "qis") return cmd_qis(c);
  if (c.command == "verify") return cmd_verify(c);
  throw UsageError("unknown command '" + c.command + "'");
}

// ---------------------------------------------------------------------------
// Front end
// ---------------------------------------------------------------------------

/// Writes `text` to `path` through a sibling temporary file and a rename.
inline void write_atomically(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << text;
    if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"GHZ-Bell channel protocol simulator and verifier", "ghzbell"};
  app.require_subcommand(1);

  RunConfig c;
  c.seed = default_seed();
  std::string format = "json";
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", c.n, "Channel order N")->capture_default_str();
    sub->add_option("--trials", c.trials, "Random inputs per run")
        ->capture_default_str();
    sub->add_option("--seed", c.seed, "Master seed (default from $" +
                                          std::string(kSeedEnvVar) + ")");
    sub->add_flag("--enumerate", c.enumerate, "Check every measurement branch");
    sub->add_option("--format", format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    sub->add_option("--output", c.output, "Write the report here");
  };

  auto* superdense = app.add_subcommand("superdense", "Exhaustive encode/decode roundtrip");
  add_common(superdense);
  auto* teleport = app.add_subcommand("teleport", "Teleportation runs");
  add_common(teleport);
  std::string teleport_protocol = "n";
  teleport->add_option("--protocol", teleport_protocol, "n, fivequbit or two")
      ->capture_default_str();
  auto* qis = app.add_subcommand("qis", "Three-party information splitting");
  add_common(qis);
  std::string qis_protocol = "two";
  qis->add_option("--protocol", qis_protocol, "i, ii, iii, two or n")
      ->capture_default_str();
  auto* verify = app.add_subcommand("verify", "Basis, entanglement and completeness suite");
  add_common(verify);
  verify->add_flag("--inject-corrupt-basis", c.inject_corrupt_basis,
                   "Test hook: add a basis with a repeated element");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitPass;
    }
    err << "ghzbell: " << e.what() << "\n";
    return kExitUsage;
  }

  for (auto* sub : app.get_subcommands()) c.command = sub->get_name();
  c.format = parse_format(format);
  if (c.command == "teleport") c.protocol = teleport_protocol;
  if (c.command == "qis") c.protocol = qis_protocol;

  Report report;
  try {
    report = run_command(c);
  } catch (const UsageError& e) {
    err << "ghzbell " << c.command << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "ghzbell " << c.command << ": " << e.what() << "\n";
    return kExitFailure;
  }

  const auto text = render(report);
  if (c.output.empty()) {
    out << text;
  } else {
    try {
      write_atomically(c.output, text);
    } catch (const std::exception& e) {
      err << "ghzbell: " << e.what() << "\n";
      return kExitFailure;
    }
  }
  return report.pass() ? kExitPass : kExitFailure;
}

}  // namespace ghzbell
