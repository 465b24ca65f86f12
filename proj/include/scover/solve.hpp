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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scover/cnf.hpp"
#include "scover/core.hpp"

// Decision procedures for satisfiability and for covering existence.
//
// All engines are deterministic and, when a witness exists, the witness
// they return is pinned down exactly: the exhaustive engines scan
// assignments in the order all-true first, then flipping later positions
// before earlier ones (1 sorts before 0, position 1 most significant), so
// they return the order's first witness; the search engine re-verifies its
// witness before returning it.

namespace scover {

// Exhaustive engines refuse instances whose enumeration would exceed
// 2^kExhaustiveLimit candidates.
inline constexpr int kExhaustiveLimit = 20;

class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveStats {
  std::uint64_t nodes = 0;       // candidates tested / branch points visited
  std::uint64_t inferences = 0;  // forced assignments applied
  std::optional<int> infeasible_pair;  // pair whose both components are private
};

struct SolveResult {
  bool found = false;
  std::optional<Selection> witness;
  SolveStats stats;
};

namespace detail {

// Writes the counter'th entry of the scan order into bits: entry 0 is
// all-ones, and bit i of the counter (from the least significant end)
// controls position n-1-i, inverted.
inline void selection_from_counter(std::uint64_t counter, std::vector<std::uint8_t>& bits) {
  const std::size_t n = bits.size();
  for (std::size_t i = 0; i < n; ++i) {
    bits[i] = static_cast<std::uint8_t>(1u - ((counter >> (n - 1 - i)) & 1u));
  }
}

inline void require_exhaustible(int width, const char* what) {
  if (width > kExhaustiveLimit) {
    throw LimitError(std::string(what) + ": instance width " +
                     std::to_string(width) + " exceeds the exhaustive limit of " +
                     std::to_string(kExhaustiveLimit));
  }
}

}  // namespace detail

// Truth-table engine: tries every assignment in scan order.
inline SolveResult sat_truth_table(const CnfFormula& f) {
  detail::require_exhaustible(f.variable_count, "sat_truth_table");
  SolveResult r;
  Selection s;
  s.bits.resize(static_cast<std::size_t>(f.variable_count));
  const std::uint64_t total = std::uint64_t{1} << f.variable_count;
  for (std::uint64_t counter = 0; counter < total; ++counter) {
    detail::selection_from_counter(counter, s.bits);
    ++r.stats.nodes;
    if (evaluate(f, s)) {
      r.found = true;
      r.witness = s;
      return r;
    }
  }
  return r;
}

// Exhaustive covering engine: tries every component selection in scan
// order.
inline SolveResult cover_brute_force(const Decomposition& d) {
  detail::require_exhaustible(d.pair_count(), "cover_brute_force");
  SolveResult r;
  Selection s;
  s.bits.resize(static_cast<std::size_t>(d.pair_count()));
  const std::uint64_t total = std::uint64_t{1} << d.pair_count();
  for (std::uint64_t counter = 0; counter < total; ++counter) {
    detail::selection_from_counter(counter, s.bits);
    ++r.stats.nodes;
    if (is_covering(d, s)) {
      r.found = true;
      r.witness = s;
      return r;
    }
  }
  return r;
}

// Covering engine with forcing. Elements private to one component force
// that component into any covering; when both components of a pair are
// forced the instance has no covering at all, decided without search.
// Otherwise only the unforced pairs are enumerated, in the same scan
// order, so the first witness found is the same selection the plain
// exhaustive engine returns.
inline SolveResult cover_with_inference(const Decomposition& d) {
  SolveResult r;
  const InferenceOutcome inf = infer_forced(d);
  r.stats.inferences = inf.forced.size();
  if (inf.infeasible_pair) {
    r.stats.infeasible_pair = inf.infeasible_pair;
    return r;
  }

  Selection s;
  s.bits.assign(static_cast<std::size_t>(d.pair_count()), 0);
  std::vector<std::size_t> free_positions;
  std::vector<bool> pinned(static_cast<std::size_t>(d.pair_count()), false);
  for (const ForcedChoice& fc : inf.forced) {
    s.bits[static_cast<std::size_t>(fc.pair - 1)] = fc.first ? 1 : 0;
    pinned[static_cast<std::size_t>(fc.pair - 1)] = true;
  }
  for (std::size_t i = 0; i < pinned.size(); ++i) {
    if (!pinned[i]) free_positions.push_back(i);
  }

  detail::require_exhaustible(static_cast<int>(free_positions.size()),
                              "cover_with_inference");
  const std::uint64_t total = std::uint64_t{1} << free_positions.size();
  const std::size_t width = free_positions.size();
  for (std::uint64_t counter = 0; counter < total; ++counter) {
    for (std::size_t i = 0; i < width; ++i) {
      s.bits[free_positions[i]] =
          static_cast<std::uint8_t>(1u - ((counter >> (width - 1 - i)) & 1u));
    }
    ++r.stats.nodes;
    if (is_covering(d, s)) {
      r.found = true;
      r.witness = s;
      return r;
    }
  }
  return r;
}

// A satisfying assignment and a covering selection are the same bit
// vector under the true-equals-first-component convention; the seam is
// the identity, kept explicit so call sites say which reading they mean.
inline Selection covering_to_assignment(const Decomposition& d, const Selection& s) {
  require_selection_size(d, s, "covering_to_assignment");
  return s;
}

namespace detail {

// Backtracking search state shared across the recursion.
struct DpllState {
  const CnfFormula& f;
  std::vector<std::int8_t> assign;  // -1 unassigned, 0 false, 1 true
  SolveStats stats;

  explicit DpllState(const CnfFormula& formula)
      : f(formula),
        assign(static_cast<std::size_t>(formula.variable_count), -1) {}

  // Propagates units and pure literals to fixpoint. Returns false on an
  // emptied clause. Appends every variable it assigns to trail.
  bool propagate(std::vector<int>& trail) {
    for (;;) {
      bool changed = false;
      // unit clauses, scanned in clause order
      for (const Clause& c : f.clauses) {
        int unassigned_var = 0;
        bool unassigned_pol = false;
        int unassigned_count = 0;
        bool satisfied = false;
        for (const Literal& lit : c.literals) {
          const std::int8_t v = assign[static_cast<std::size_t>(lit.variable - 1)];
          if (v < 0) {
            ++unassigned_count;
            unassigned_var = lit.variable;
            unassigned_pol = lit.positive;
          } else if ((v == 1) == lit.positive) {
            satisfied = true;
            break;
          }
        }
        if (satisfied) continue;
        if (unassigned_count == 0) return false;
        if (unassigned_count == 1) {
          assign[static_cast<std::size_t>(unassigned_var - 1)] = unassigned_pol ? 1 : 0;
          trail.push_back(unassigned_var);
          ++stats.inferences;
          changed = true;
        }
      }
      if (changed) continue;
      // first pure variable, scanned ascending over unsatisfied clauses
      for (int var = 1; var <= f.variable_count && !changed; ++var) {
        if (assign[static_cast<std::size_t>(var - 1)] >= 0) continue;
        bool pos = false, neg = false;
        for (const Clause& c : f.clauses) {
          bool satisfied = false;
          for (const Literal& lit : c.literals) {
            const std::int8_t v = assign[static_cast<std::size_t>(lit.variable - 1)];
            if (v >= 0 && (v == 1) == lit.positive) {
              satisfied = true;
              break;
            }
          }
          if (satisfied) continue;
          for (const Literal& lit : c.literals) {
            if (lit.variable != var) continue;
            (lit.positive ? pos : neg) = true;
          }
        }
        if (pos == neg) continue;  // occurs both ways, or in no open clause
        assign[static_cast<std::size_t>(var - 1)] = pos ? 1 : 0;
        trail.push_back(var);
        ++stats.inferences;
        changed = true;
      }
      if (!changed) return true;
    }
  }

  bool all_satisfied() const {
    for (const Clause& c : f.clauses) {
      bool satisfied = false;
      for (const Literal& lit : c.literals) {
        const std::int8_t v = assign[static_cast<std::size_t>(lit.variable - 1)];
        if (v >= 0 && (v == 1) == lit.positive) {
          satisfied = true;
          break;
        }
      }
      if (!satisfied) return false;
    }
    return true;
  }

  bool search() {
    std::vector<int> trail;
    if (!propagate(trail)) {
      undo(trail);
      return false;
    }
    if (all_satisfied()) return true;
    int var = 0;
    for (int i = 1; i <= f.variable_count; ++i) {
      if (assign[static_cast<std::size_t>(i - 1)] < 0) {
        var = i;
        break;
      }
    }
    if (var == 0) {
      // everything assigned yet some clause open: contradiction
      undo(trail);
      return false;
    }
    ++stats.nodes;
    for (const std::int8_t value : {std::int8_t{1}, std::int8_t{0}}) {
      assign[static_cast<std::size_t>(var - 1)] = value;
      if (search()) return true;
      assign[static_cast<std::size_t>(var - 1)] = -1;
    }
    undo(trail);
    return false;
  }

  void undo(const std::vector<int>& trail) {
    for (const int var : trail) assign[static_cast<std::size_t>(var - 1)] = -1;
  }
};

}  // namespace detail

// Backtracking engine with unit propagation and pure-literal forcing.
// Branches on the lowest unassigned variable, true first. Variables left
// unassigned at acceptance are set true. The witness is re-checked against
// the formula before being returned.
inline SolveResult sat_dpll(const CnfFormula& f) {
  detail::DpllState state(f);
  SolveResult r;
  const bool found = state.search();
  r.stats = state.stats;
  if (!found) return r;
  Selection s;
  s.bits.resize(static_cast<std::size_t>(f.variable_count));
  for (int i = 0; i < f.variable_count; ++i) {
    const std::int8_t v = state.assign[static_cast<std::size_t>(i)];
    s.bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v < 0 ? 1 : v);
  }
  if (!evaluate(f, s)) {
    throw std::logic_error("sat_dpll: search accepted a non-satisfying assignment");
  }
  r.found = true;
  r.witness = std::move(s);
  return r;
}

}  // namespace scover
