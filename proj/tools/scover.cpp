// Copyright 2026 The scover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.
//
//   scover validate <str|@file> [--kind cnf|decomp]
//   scover reduce --dir cnf2dec|dec2cnf <str|@file>
//   scover solve --engine truthtable|dpll|brute|inferred <str|@file>
//   scover verify [--count N] [--seed S] [--n-max K] [--m-max M]
//                 [--mutate forward|backward]
//   scover gen --kind cnf|decomp --seed S --n N --m M
//
// Every run exits with one of four codes:
//   0  accepted / satisfiable / covering found / all checks passed
//   1  unsatisfiable / no covering / some check failed
//   2  rejected input, unusable arguments, or unreadable file
//   3  instance too wide for an exhaustive engine
//
// Results go to standard output as a single line with a fixed verdict
// prefix; diagnostics go to standard error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "scover/scover.hpp"

namespace {

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitReject = 2;
constexpr int kExitLimit = 3;

// Resolves an input argument: literal text, or file contents when prefixed
// with '@' (trailing newline bytes stripped). Returns false on an
// unreadable file, with the exit code already printed to stderr.
bool resolve_input(const std::string& arg, std::string& out) {
  if (arg.empty() || arg[0] != '@') {
    out = arg;
    return true;
  }
  const std::string path = arg.substr(1);
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read file '" << path << "'\n";
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  while (!out.empty() && (out.back() == '\n' || out.back() == '\r')) {
    out.pop_back();
  }
  return true;
}

void print_reject(const scover::ParseError& err) {
  std::cout << "REJECT " << err.message << " (offset " << err.offset << ")\n";
}

std::string bits_csv(const scover::Selection& s) {
  std::string out;
  for (std::size_t i = 0; i < s.bits.size(); ++i) {
    if (i > 0) out += ',';
    out += s.bits[i] ? '1' : '0';
  }
  return out;
}

int run_validate(const std::string& raw, const std::string& kind) {
  std::string text;
  if (!resolve_input(raw, text)) return kExitReject;

  const bool as_decomp =
      kind == "decomp" ||
      (kind.empty() && !text.empty() && (text[0] == 'e' || text[0] == '~'));
  if (as_decomp) {
    auto parsed = scover::parse_decomposition(text);
    if (!parsed) {
      print_reject(parsed.error);
      return kExitReject;
    }
    std::cout << "DECOMP n=" << parsed.value->pair_count()
              << " m=" << parsed.value->element_count() << "\n";
    return kExitPositive;
  }
  auto parsed = scover::parse_cnf(text);
  if (!parsed) {
    print_reject(parsed.error);
    return kExitReject;
  }
  std::cout << "CNF n=" << parsed.value->variable_count
            << " m=" << parsed.value->clause_count() << "\n";
  return kExitPositive;
}

int run_reduce(const std::string& raw, const std::string& dir) {
  std::string text;
  if (!resolve_input(raw, text)) return kExitReject;

  const scover::StringReduction out = dir == "cnf2dec"
                                          ? scover::reduce_cnf_string(text)
                                          : scover::reduce_decomposition_string(text);
  std::cout << out.text << "\n";
  if (!out.accepted) {
    std::cerr << "rejected: " << out.reject_reason.message << " (offset "
              << out.reject_reason.offset << ")\n";
    return kExitReject;
  }
  return kExitPositive;
}

int run_solve(const std::string& raw, const std::string& engine) {
  std::string text;
  if (!resolve_input(raw, text)) return kExitReject;

  try {
    if (engine == "truthtable" || engine == "dpll") {
      auto parsed = scover::parse_cnf(text);
      if (!parsed) {
        print_reject(parsed.error);
        return kExitReject;
      }
      const scover::SolveResult r = engine == "dpll"
                                        ? scover::sat_dpll(*parsed.value)
                                        : scover::sat_truth_table(*parsed.value);
      std::cerr << "nodes=" << r.stats.nodes
                << " inferences=" << r.stats.inferences << "\n";
      if (!r.found) {
        std::cout << "UNSAT\n";
        return kExitNegative;
      }
      if (!scover::evaluate(*parsed.value, *r.witness)) {
        throw std::logic_error("witness failed re-verification");
      }
      std::cout << "SAT " << bits_csv(*r.witness) << "\n";
      return kExitPositive;
    }

    auto parsed = scover::parse_decomposition(text);
    if (!parsed) {
      print_reject(parsed.error);
      return kExitReject;
    }
    const scover::SolveResult r = engine == "inferred"
                                      ? scover::cover_with_inference(*parsed.value)
                                      : scover::cover_brute_force(*parsed.value);
    std::cerr << "nodes=" << r.stats.nodes
              << " inferences=" << r.stats.inferences << "\n";
    if (!r.found) {
      if (r.stats.infeasible_pair) {
        std::cerr << "pair " << *r.stats.infeasible_pair
                  << ": both components forced\n";
      }
      std::cout << "NO-COVERING\n";
      return kExitNegative;
    }
    if (!scover::is_covering(*parsed.value, *r.witness)) {
      throw std::logic_error("witness failed re-verification");
    }
    std::cout << "COVER "
              << bits_csv(scover::covering_to_assignment(*parsed.value, *r.witness))
              << "\n";
    return kExitPositive;
  } catch (const scover::LimitError& e) {
    std::cout << "LIMIT " << e.what() << "\n";
    return kExitLimit;
  }
}

int run_verify(int count, std::uint64_t seed, int n_max, int m_max,
               const std::string& mutate) {
  scover::VerifyConfig config;
  config.count = count;
  config.seed = seed;
  config.max_variables = n_max;
  config.max_clauses = m_max;
  if (mutate == "forward") config.fault = scover::FaultInjection::Forward;
  else if (mutate == "backward") config.fault = scover::FaultInjection::Backward;

  if (count == 0) {
    std::cerr << "warning: count is 0, all checks pass vacuously\n";
  }

  scover::VerifyReport report;
  try {
    report = scover::run_verification(config);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitReject;
  }

  for (const scover::VerifyFailure& f : report.failures) {
    std::cerr << "FAIL " << f.property << " " << f.instance << " -- "
              << f.detail << "\n";
  }
  std::cout << report.forward_pass << "/" << report.count << " forward, "
            << report.backward_pass << "/" << report.count << " backward, "
            << report.roundtrip_pass << "/" << report.count << " roundtrip\n";
  return report.all_passed() ? kExitPositive : kExitNegative;
}

int run_gen(const std::string& kind, std::uint64_t seed, int n, int m) {
  scover::Rng rng(seed);
  try {
    if (kind == "cnf") {
      std::cout << scover::serialize_cnf(scover::random_cnf(rng, n, m)) << "\n";
    } else {
      std::cout << scover::serialize_decomposition(
                       scover::random_decomposition(rng, n, m))
                << "\n";
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitReject;
  }
  return kExitPositive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"special covering / satisfiability toolkit"};
  app.require_subcommand(1);

  std::string input;
  std::string kind;
  auto* validate = app.add_subcommand(
      "validate", "check a string against its grammar and report n, m");
  validate->add_option("input", input, "instance string, or @file")->required();
  validate->add_option("--kind", kind, "force the input kind")
      ->check(CLI::IsMember({"cnf", "decomp"}));

  std::string dir;
  auto* reduce = app.add_subcommand(
      "reduce", "translate between the formula and decomposition languages");
  reduce->add_option("input", input, "instance string, or @file")->required();
  reduce->add_option("--dir", dir, "translation direction")
      ->required()
      ->check(CLI::IsMember({"cnf2dec", "dec2cnf"}));

  std::string engine;
  auto* solve = app.add_subcommand("solve", "decide an instance");
  solve->add_option("input", input, "instance string, or @file")->required();
  solve->add_option("--engine", engine, "decision engine")
      ->required()
      ->check(CLI::IsMember({"truthtable", "dpll", "brute", "inferred"}));

  int count = 1000;
  std::uint64_t seed = 0;
  int n_max = 8;
  int m_max = 12;
  std::string mutate;
  auto* verify = app.add_subcommand(
      "verify", "cross-check the two languages on random instances");
  verify->add_option("--count", count, "rounds to run")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--n-max", n_max, "largest variable/pair count")
      ->check(CLI::PositiveNumber);
  verify->add_option("--m-max", m_max, "largest clause/element count")
      ->check(CLI::PositiveNumber);
  verify
      ->add_option("--mutate", mutate,
                   "inject a deliberate translation fault (harness self-test)")
      ->check(CLI::IsMember({"forward", "backward"}));

  int n = 0;
  int m = 0;
  auto* gen = app.add_subcommand("gen", "emit a random valid instance");
  gen->add_option("--kind", kind, "instance kind")
      ->required()
      ->check(CLI::IsMember({"cnf", "decomp"}));
  gen->add_option("--seed", seed, "random seed")->required();
  gen->add_option("--n", n, "variable/pair count")->required();
  gen->add_option("--m", m, "clause/element count")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitReject;
  }

  if (validate->parsed()) return run_validate(input, kind);
  if (reduce->parsed()) return run_reduce(input, dir);
  if (solve->parsed()) return run_solve(input, engine);
  if (verify->parsed()) return run_verify(count, seed, n_max, m_max, mutate);
  if (gen->parsed()) return run_gen(kind, seed, n, m);
  return kExitReject;
}
