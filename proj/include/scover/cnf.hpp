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

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "scover/core.hpp"

namespace scover {

// A variable occurrence: variable number (1-based) plus polarity.
struct Literal {
  int variable = 0;
  bool positive = true;

  friend constexpr auto operator<=>(const Literal&, const Literal&) = default;
};

// Kept sorted by variable number; one polarity per variable.
struct Clause {
  std::vector<Literal> literals;

  friend bool operator==(const Clause&, const Clause&) = default;
};

// Clause order is significant (clause j is the j-th conjunct and doubles as
// the code of element j under the reductions). Duplicate clauses are legal
// and preserved. variable_count fixes the variable universe 1..n; whether
// every variable actually occurs is a property some consumers require and
// check themselves.
struct CnfFormula {
  std::vector<Clause> clauses;
  int variable_count = 0;

  int clause_count() const { return static_cast<int>(clauses.size()); }

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

// Builds a formula from signed variable numbers, +v for the variable and -v
// for its negation. Checks shape only: nonempty clauses, variables within
// 1..variable_count, no repeated variable inside a clause (which also rules
// out a variable together with its negation).
inline CnfFormula make_cnf(int variable_count,
                           const std::vector<std::vector<int>>& clauses) {
  if (variable_count < 1) {
    throw std::invalid_argument("make_cnf: variable_count must be >= 1");
  }
  if (clauses.empty()) {
    throw std::invalid_argument("make_cnf: a formula needs at least one clause");
  }
  CnfFormula f;
  f.variable_count = variable_count;
  f.clauses.reserve(clauses.size());
  for (const std::vector<int>& raw : clauses) {
    if (raw.empty()) {
      throw std::invalid_argument("make_cnf: empty clause");
    }
    Clause c;
    c.literals.reserve(raw.size());
    for (int lit : raw) {
      const int v = std::abs(lit);
      if (lit == 0 || v > variable_count) {
        throw std::invalid_argument("make_cnf: variable number out of range");
      }
      c.literals.push_back(Literal{v, lit > 0});
    }
    std::sort(c.literals.begin(), c.literals.end());
    for (std::size_t i = 1; i < c.literals.size(); ++i) {
      if (c.literals[i].variable == c.literals[i - 1].variable) {
        throw std::invalid_argument("make_cnf: variable repeated within a clause");
      }
    }
    f.clauses.push_back(std::move(c));
  }
  return f;
}

inline bool every_variable_occurs(const CnfFormula& f) {
  std::vector<bool> seen(static_cast<std::size_t>(f.variable_count) + 1, false);
  for (const Clause& c : f.clauses) {
    for (const Literal& l : c.literals) seen[static_cast<std::size_t>(l.variable)] = true;
  }
  for (int v = 1; v <= f.variable_count; ++v) {
    if (!seen[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

inline bool evaluate(const Clause& c, const Selection& assignment) {
  for (const Literal& l : c.literals) {
    if (assignment.first_selected(l.variable - 1) == l.positive) return true;
  }
  return false;
}

inline bool evaluate(const CnfFormula& f, const Selection& assignment) {
  if (assignment.size() != f.variable_count) {
    throw std::invalid_argument("evaluate: assignment length != variable count");
  }
  for (const Clause& c : f.clauses) {
    if (!evaluate(c, assignment)) return false;
  }
  return true;
}

}  // namespace scover
