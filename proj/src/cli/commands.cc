// Copyright 2026 The ltransfer Authors
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

#include "cli/commands.h"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "ltransfer/errors.h"
#include "ltransfer/game.h"
#include "ltransfer/io.h"
#include "ltransfer/mechanism.h"
#include "ltransfer/network.h"
#include "ltransfer/oracle.h"
#include "ltransfer/rounding.h"

namespace ltransfer::cli {
namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void WriteText(const std::string& path, const std::string& text,
               std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file || !(file << text)) throw IoError("cannot write '" + path + "'");
}

template <typename F>
int Guard(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ValidationError& e) {
    err << "validation failed:\n";
    for (const auto& p : e.problems()) err << "  - " << p << "\n";
    return kValidationError;
  } catch (const CapExceededError& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const DefectError& e) {
    err << "internal error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kValidationError;
  }
}

std::string JoinVector(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string JoinMultiset(std::vector<std::int64_t> v) {
  v = oracle::SortedDescending(std::move(v));
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

FlowNetwork BuildFor(const Instance& instance, Variant variant) {
  return variant == Variant::kExtended ? BuildExtendedNetwork(instance)
                                       : BuildBaseNetwork(instance);
}

// Checks shared by both instance kinds: labels, β, and relaxed-core
// feasibility of ĥ. Returns false after printing the failure.
bool CheckAgainstGame(const FlowNetwork& net, const Solution& sol,
                      std::ostream& out) {
  if (sol.sinks != net.SinkLabels() || sol.beta != net.SinkCapacities()) {
    out << "FAIL: solution schools or deficits do not match the instance\n";
    return false;
  }
  CharacteristicFunction w(net);
  AchievabilityResult ach = CheckAchievable(ToRational(sol.h_hat), w);
  if (!ach.achievable) {
    out << "FAIL: h_hat " << JoinVector(sol.h_hat)
        << " is not achievable; witness B="
        << FormatSubset(*ach.witness, w.labels())
        << " has w(B)=" << ach.witness_worth << " > h(B)="
        << ToString(ach.witness_sum) << "\n";
    return false;
  }
  return true;
}

int VerifyPlain(const Instance& instance, const Solution& sol,
                std::ostream& out) {
  FlowNetwork net = BuildFor(instance, sol.variant);
  if (!CheckAgainstGame(net, sol, out)) return kCheckFailed;

  Transfer transfer = TransferFromSolution(instance, sol);
  if (auto problem = FeasibilityProblem(instance, transfer)) {
    out << "FAIL: transfer is infeasible: " << *problem << "\n";
    return kCheckFailed;
  }
  if (PostTransferDeficits(instance, transfer) != sol.h_hat) {
    out << "FAIL: transfer leaves deficits "
        << JoinVector(PostTransferDeficits(instance, transfer))
        << ", not h_hat " << JoinVector(sol.h_hat) << "\n";
    return kCheckFailed;
  }

  oracle::EnumerationOptions options;
  options.surplus_moves = sol.variant == Variant::kExtended;
  const oracle::DominantSet dominant =
      oracle::BruteForceLorenzDominant(instance, options);
  if (oracle::SortedDescending(sol.h_hat) != dominant.sorted) {
    out << "FAIL: h_hat multiset " << JoinMultiset(sol.h_hat)
        << " differs from the oracle's " << JoinMultiset(dominant.sorted)
        << "\n";
    return kCheckFailed;
  }
  std::optional<std::vector<std::int64_t>> counterexample;
  std::uint64_t checked = 0;
  oracle::EnumerateTransfers(
      instance,
      [&](const Transfer&, const std::vector<std::int64_t>& deficits) {
        ++checked;
        if (!counterexample && !oracle::LorenzDominates(sol.h_hat, deficits)) {
          counterexample = deficits;
        }
      },
      options);
  if (counterexample) {
    out << "FAIL: h_hat " << JoinVector(sol.h_hat)
        << " does not Lorenz-dominate feasible deficits "
        << JoinVector(*counterexample) << "\n";
    return kCheckFailed;
  }
  out << "PASS: h_hat " << JoinVector(sol.h_hat) << " matches oracle multiset "
      << JoinMultiset(dominant.sorted) << " and Lorenz-dominates all "
      << checked << " feasible transfers\n";
  return kOk;
}

int VerifyTyped(const TypedInstance& instance, const Solution& sol,
                std::ostream& out) {
  FlowNetwork net = BuildSpecializationNetwork(instance);
  if (!CheckAgainstGame(net, sol, out)) return kCheckFailed;
  const auto expected = oracle::BruteForceTypedLorenzDominant(instance);
  if (oracle::SortedDescending(sol.h_hat) != expected) {
    out << "FAIL: h_hat multiset " << JoinMultiset(sol.h_hat)
        << " differs from the oracle's " << JoinMultiset(expected) << "\n";
    return kCheckFailed;
  }
  out << "PASS: h_hat " << JoinVector(sol.h_hat) << " matches oracle multiset "
      << JoinMultiset(expected) << "\n";
  return kOk;
}

}  // namespace

int Solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    io::Json doc = io::ReadJsonFile(args.instance_path);
    Variant variant = ParseVariant(args.variant);
    Solution sol;
    if (io::IsTypedDocument(doc)) {
      sol = ltransfer::Solve(io::ParseTypedInstance(doc)).solution;
    } else {
      if (variant == Variant::kSpecialization) {
        throw ValidationError(
            {"the specialization variant needs a document with subjects"});
      }
      sol = ltransfer::Solve(io::ParseInstance(doc), variant).solution;
    }
    WriteText(args.output_path,
              io::Dump(io::ToJson(sol, args.instance_path, args.timings)),
              out);
    return kOk;
  });
}

int Verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    io::Json doc = io::ReadJsonFile(args.instance_path);
    const bool typed = io::IsTypedDocument(doc);
    std::optional<Solution> given;
    if (!args.solution_path.empty()) {
      given = io::ParseSolution(io::ReadJsonFile(args.solution_path));
    }
    if (typed) {
      TypedInstance instance = io::ParseTypedInstance(doc);
      Solution sol = given ? *given : ltransfer::Solve(instance).solution;
      return VerifyTyped(instance, sol, out);
    }
    Instance instance = io::ParseInstance(doc);
    Solution sol = given ? *given
                         : ltransfer::Solve(instance, ParseVariant(args.variant))
                               .solution;
    if (sol.variant == Variant::kSpecialization) {
      throw ValidationError({"specialization solution for a plain instance"});
    }
    return VerifyPlain(instance, sol, out);
  });
}

int AuditSp(const AuditArgs& args, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    Instance instance =
        io::ParseInstance(io::ReadJsonFile(args.instance_path));
    if (instance.HasSurplusAcceptables()) {
      err << "note: surplus-school preferences are ignored by the mechanism\n";
      instance = instance.RestrictToDeficitAcceptables();
    }
    TieBreakOrder order(instance);
    AuditBudget budget = args.sample ? AuditBudget::Sampled(*args.sample,
                                                            args.seed)
                                     : AuditBudget::All();
    Selector selector = args.broken ? ScrambledSelector(args.seed) : nullptr;
    AuditReport report =
        AuditStrategyProofness(instance, order, budget, {}, selector);
    if (args.json) {
      out << io::Dump(io::ToJson(report));
    } else {
      for (const auto& t : report.teachers) {
        out << t.teacher << ": "
            << (t.stays_when_truthful ? "stays" : "moves") << ", "
            << t.misreports_tested << " misreports, " << t.violations
            << " profitable\n";
      }
      for (const auto& v : report.violations) {
        out << "VIOLATION: " << v.teacher << " reports {";
        for (std::size_t i = 0; i < v.misreport.size(); ++i) {
          out << (i ? "," : "") << v.misreport[i];
        }
        out << "} and obtains " << v.obtained << "\n";
      }
      out << report.total_tested() << " misreports tested, "
          << report.violations.size() << " violations\n";
    }
    return report.ok() ? kOk : kCheckFailed;
  });
}

int Gen(const GeneratorOptions& options, const std::string& output_path,
        std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    if (options.surplus < 1 || options.deficit < 1 || options.teachers < 0 ||
        options.max_alpha < 1 || options.max_beta < 1 ||
        !(options.accept_prob > 0 && options.accept_prob <= 1)) {
      throw ValidationError({"generator sizes must be positive and "
                             "accept-prob must lie in (0, 1]"});
    }
    RawInstance raw = GenerateInstance(options);
    Instance::Validate(raw);
    WriteText(output_path, io::Dump(io::ToJson(raw)), out);
    return kOk;
  });
}

int Report(const ReportArgs& args, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    Solution sol = io::ParseSolution(io::ReadJsonFile(args.solution_path));
    std::map<std::string, int> moved_in;
    for (const auto& [teacher, dest] : sol.assignment) {
      if (dest != kStay) ++moved_in[dest];
    }

    out << "variant: " << ToString(sol.variant) << "\n";
    out << "max flow: " << sol.max_flow << "\n";
    for (std::size_t j = 0; j < sol.partition.size(); ++j) {
      out << "block D" << j + 1 << ": {";
      for (std::size_t i = 0; i < sol.partition[j].size(); ++i) {
        out << (i ? "," : "") << sol.partition[j][i];
      }
      out << "}\n";
    }
    out << std::left << std::setw(12) << "school" << std::setw(8) << "beta"
        << std::setw(10) << "h*" << std::setw(8) << "h_hat" << "moved_in\n";
    for (std::size_t k = 0; k < sol.sinks.size(); ++k) {
      out << std::setw(12) << sol.sinks[k] << std::setw(8) << sol.beta[k]
          << std::setw(10) << ToString(sol.h_star[k]) << std::setw(8)
          << sol.h_hat[k] << moved_in[sol.sinks[k]] << "\n";
    }
    const int moved = sol.NumMoved();
    out << moved << (moved == 1 ? " teacher" : " teachers") << " moved\n";

    if (!args.csv_path.empty()) {
      std::ostringstream csv;
      csv << "school,beta,h_hat,moved_in\n";
      for (std::size_t k = 0; k < sol.sinks.size(); ++k) {
        csv << sol.sinks[k] << "," << sol.beta[k] << "," << sol.h_hat[k] << ","
            << moved_in[sol.sinks[k]] << "\n";
      }
      WriteText(args.csv_path, csv.str(), out);
    }
    return kOk;
  });
}

int Main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lorenz-dominant teacher transfers"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Compute h*, h_hat, transfer");
  solve_cmd->add_option("instance", solve.instance_path)->required();
  solve_cmd->add_option("--variant", solve.variant)
      ->check(CLI::IsMember({"base", "extended", "specialization"}));
  solve_cmd->add_option("-o,--output", solve.output_path);
  bool no_timings = false;
  solve_cmd->add_flag("--no-timings", no_timings,
                      "Omit wall-clock timings for byte-stable output");

  VerifyArgs verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "Check a solution against the oracle");
  verify_cmd->add_option("instance", verify.instance_path)->required();
  verify_cmd->add_option("--variant", verify.variant)
      ->check(CLI::IsMember({"base", "extended", "specialization"}));
  verify_cmd->add_option("--solution", verify.solution_path);

  AuditArgs audit;
  int sample = 0;
  auto* audit_cmd =
      app.add_subcommand("audit-sp", "Search for profitable misreports");
  audit_cmd->add_option("instance", audit.instance_path)->required();
  auto* all_flag = audit_cmd->add_flag("--all", "Every misreport (default)");
  auto* sample_opt = audit_cmd->add_option("--sample", sample,
                                           "Random misreports per teacher");
  all_flag->excludes(sample_opt);
  audit_cmd->add_option("--seed", audit.seed);
  audit_cmd->add_flag("--json", audit.json);
  audit_cmd->add_flag("--broken", audit.broken)->group("");

  GeneratorOptions gen;
  std::string gen_output;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--surplus", gen.surplus);
  gen_cmd->add_option("--deficit", gen.deficit);
  gen_cmd->add_option("--teachers", gen.teachers);
  gen_cmd->add_option("--max-alpha", gen.max_alpha);
  gen_cmd->add_option("--max-beta", gen.max_beta);
  gen_cmd->add_option("--accept-prob", gen.accept_prob);
  gen_cmd->add_option("-o,--output", gen_output);

  ReportArgs report;
  auto* report_cmd = app.add_subcommand("report", "Summarize a solution");
  report_cmd->add_option("solution", report.solution_path)->required();
  report_cmd->add_option("--csv", report.csv_path,
                         "Per-school CSV path, or - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidationError;
  }

  if (solve_cmd->parsed()) {
    solve.timings = !no_timings;
    return Solve(solve, out, err);
  }
  if (verify_cmd->parsed()) return Verify(verify, out, err);
  if (audit_cmd->parsed()) {
    if (sample_opt->count() > 0) audit.sample = sample;
    return AuditSp(audit, out, err);
  }
  if (gen_cmd->parsed()) return Gen(gen, gen_output, out, err);
  return Report(report, out, err);
}

}  // namespace ltransfer::cli
