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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scover/cnf.hpp"
#include "scover/codec.hpp"
#include "scover/core.hpp"
#include "scover/gen.hpp"
#include "scover/reduce.hpp"
#include "scover/solve.hpp"

// Randomized self-check of the translation layer. Each round draws one
// random formula and one random decomposition and checks three property
// buckets:
//
//   forward    the formula's image is a valid decomposition, the image
//              has a covering exactly when the formula is satisfiable,
//              and every single assignment satisfies the formula exactly
//              when it covers the image;
//   backward   the mirror bucket, starting from the decomposition;
//   roundtrip  translating forward then back (and back then forward)
//              returns the exact input.
//
// The harness itself is testable: a deliberate fault can be injected into
// either direction of the translation, and a sound harness must then
// report failures. Both faults keep the translated value well formed, so
// a fault can never crash the run, only fail it.

namespace scover {

enum class FaultInjection {
  None,
  Forward,   // swap the components of pair 1 of every forward image
  Backward,  // negate the first literal of clause 1 of every backward image
};

struct VerifyConfig {
  int count = 1000;           // rounds; each draws one formula and one decomposition
  std::uint64_t seed = 0;
  int max_variables = 8;      // instance caps, drawn uniformly from 1..max
  int max_clauses = 12;
  FaultInjection fault = FaultInjection::None;
};

struct VerifyFailure {
  std::string property;  // "forward", "backward" or "roundtrip"
  std::string instance;  // offending input, serialized
  std::string detail;
};

struct VerifyReport {
  int count = 0;
  int forward_pass = 0;
  int backward_pass = 0;
  int roundtrip_pass = 0;
  std::vector<VerifyFailure> failures;  // capped; pass counters are exact

  bool all_passed() const {
    return forward_pass == count && backward_pass == count &&
           roundtrip_pass == count;
  }
};

namespace detail {

inline constexpr std::size_t kMaxStoredFailures = 16;

inline void record(VerifyReport& report, std::string property,
                   std::string instance, std::string detail) {
  if (report.failures.size() < kMaxStoredFailures) {
    report.failures.push_back(
        {std::move(property), std::move(instance), std::move(detail)});
  }
}

inline Decomposition forward_image(const CnfFormula& f, FaultInjection fault) {
  Decomposition d = cnf_to_decomposition(f);
  if (fault == FaultInjection::Forward) {
    std::swap(d.pairs.front().first, d.pairs.front().second);
  }
  return d;
}

inline CnfFormula backward_image(const Decomposition& d, FaultInjection fault) {
  CnfFormula f = decomposition_to_cnf(d);
  if (fault == FaultInjection::Backward) {
    Literal& lit = f.clauses.front().literals.front();
    lit.positive = !lit.positive;
  }
  return f;
}

}  // namespace detail

// Runs config.count rounds and reports per-bucket pass counts plus the
// first few failures in full. Same config, same report, on any platform.
inline VerifyReport run_verification(const VerifyConfig& config) {
  if (config.count < 0) {
    throw std::invalid_argument("run_verification: count must be nonnegative");
  }
  if (config.max_variables < 1 || config.max_variables > kExhaustiveLimit) {
    throw std::invalid_argument(
        "run_verification: max_variables must be in 1.." +
        std::to_string(kExhaustiveLimit));
  }
  if (config.max_clauses < 1) {
    throw std::invalid_argument("run_verification: max_clauses must be positive");
  }

  Rng rng(config.seed);
  VerifyReport report;
  report.count = config.count;

  for (int round = 0; round < config.count; ++round) {
    // ---- forward bucket ----
    {
      const int n = 1 + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(config.max_variables)));
      const int m = 1 + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(config.max_clauses)));
      const CnfFormula f = random_cnf(rng, n, m);
      const std::string shown = serialize_cnf(f);
      const Decomposition image = detail::forward_image(f, config.fault);

      bool ok = true;
      const ValidationOutcome vo = validate_decomposition(image.pairs, image.ground);
      if (!vo) {
        ok = false;
        detail::record(report, "forward", shown,
                       "image is not a valid decomposition: " + vo.violation->detail);
      }
      if (ok) {
        const bool sat = sat_truth_table(f).found;
        const bool covered = cover_brute_force(image).found;
        if (sat != covered) {
          ok = false;
          detail::record(report, "forward", shown,
                         std::string("decision differs: formula is ") +
                             (sat ? "satisfiable" : "unsatisfiable") +
                             " but image has " +
                             (covered ? "a covering" : "no covering"));
        }
      }
      if (ok && n <= 8) {
        Selection s;
        s.bits.resize(static_cast<std::size_t>(n));
        const std::uint64_t total = std::uint64_t{1} << n;
        for (std::uint64_t counter = 0; counter < total && ok; ++counter) {
          detail::selection_from_counter(counter, s.bits);
          const bool sat = evaluate(f, s);
          const bool covers = is_covering(image, s);
          if (sat != covers) {
            ok = false;
            std::string bits;
            for (auto b : s.bits) bits += b ? '1' : '0';
            detail::record(report, "forward", shown,
                           "assignment " + bits + (sat ? " satisfies" : " falsifies") +
                               " the formula but " +
                               (covers ? "covers" : "does not cover") + " the image");
          }
        }
      }
      if (ok) ++report.forward_pass;

      // ---- roundtrip, formula side ----
      bool rt = true;
      const CnfFormula back = detail::backward_image(image, config.fault);
      if (back != f) {
        rt = false;
        detail::record(report, "roundtrip", shown,
                       "translating forward then back changed the formula to " +
                           serialize_cnf(back));
      }

      // ---- backward bucket ----
      const int n2 = 1 + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(config.max_variables)));
      const int m2 = 1 + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(config.max_clauses)));
      const Decomposition d = random_decomposition(rng, n2, m2);
      const std::string shown_d = serialize_decomposition(d);
      const CnfFormula image_f = detail::backward_image(d, config.fault);

      bool ok_b = true;
      {
        auto reparsed = parse_cnf(serialize_cnf(image_f));
        if (!reparsed) {
          ok_b = false;
          detail::record(report, "backward", shown_d,
                         "image is not a well-formed formula: " + reparsed.error.message);
        } else if (!every_variable_occurs(image_f)) {
          ok_b = false;
          detail::record(report, "backward", shown_d,
                         "image leaves some variable unused");
        }
      }
      if (ok_b) {
        const bool covered = cover_brute_force(d).found;
        const bool sat = sat_truth_table(image_f).found;
        if (covered != sat) {
          ok_b = false;
          detail::record(report, "backward", shown_d,
                         std::string("decision differs: decomposition has ") +
                             (covered ? "a covering" : "no covering") +
                             " but image is " +
                             (sat ? "satisfiable" : "unsatisfiable"));
        }
      }
      if (ok_b && n2 <= 8) {
        Selection s;
        s.bits.resize(static_cast<std::size_t>(n2));
        const std::uint64_t total = std::uint64_t{1} << n2;
        for (std::uint64_t counter = 0; counter < total && ok_b; ++counter) {
          detail::selection_from_counter(counter, s.bits);
          const bool covers = is_covering(d, s);
          const bool sat = evaluate(image_f, s);
          if (covers != sat) {
            ok_b = false;
            std::string bits;
            for (auto b : s.bits) bits += b ? '1' : '0';
            detail::record(report, "backward", shown_d,
                           "selection " + bits + (covers ? " covers" : " does not cover") +
                               " the decomposition but " +
                               (sat ? "satisfies" : "falsifies") + " the image");
          }
        }
      }
      if (ok_b) ++report.backward_pass;

      // ---- roundtrip, decomposition side ----
      const Decomposition back_d = detail::forward_image(image_f, config.fault);
      if (back_d != d) {
        rt = false;
        detail::record(report, "roundtrip", shown_d,
                       "translating back then forward changed the decomposition to " +
                           serialize_decomposition(back_d));
      }
      if (rt) ++report.roundtrip_pass;
    }
  }
  return report;
}

}  // namespace scover
