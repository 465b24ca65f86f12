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

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "scover/cnf.hpp"
#include "scover/codec.hpp"
#include "scover/core.hpp"

// Structure-preserving translation between formulas and decompositions.
//
// Forward: clause j becomes ground element j. Variable i becomes pair i
// whose first component holds the clauses where x_i occurs positively and
// whose second holds the clauses where it occurs negated. Components of a
// pair are disjoint because a clause never holds both polarities of a
// variable, each pair is nonempty when every variable occurs somewhere,
// and every clause lands in some component because clauses are nonempty —
// so the image is a valid decomposition of {1..m} into n pairs.
//
// Backward: ground element i becomes clause i containing x_j positive when
// element i sits in the first component of pair j and negated when in the
// second. Decomposition validity makes these clauses well formed (per-pair
// disjointness: no clashing polarities; coverage: no empty clause) and
// pair j nonempty puts variable j in some clause.
//
// The two maps are mutually inverse bijections, and they carry witnesses
// across: an assignment satisfies a formula exactly when, read as a
// component selection (true = first), it covers the image, and the same
// holds backward. Both run in linear time in the token count of the input.

namespace scover {

// Forward map. Requires a well-formed formula in which every variable
// 1..variable_count occurs; throws std::invalid_argument otherwise (the
// parser already enforces occurrence, so parsed input never throws).
inline Decomposition cnf_to_decomposition(const CnfFormula& f) {
  if (f.variable_count < 1 || f.clauses.empty()) {
    throw std::invalid_argument("cnf_to_decomposition: formula must have at least one variable and one clause");
  }
  Decomposition d;
  d.pairs.resize(static_cast<std::size_t>(f.variable_count));
  for (int j = 0; j < f.clause_count(); ++j) {
    const Element e{j + 1};
    for (const Literal& lit : f.clauses[static_cast<std::size_t>(j)].literals) {
      if (lit.variable < 1 || lit.variable > f.variable_count) {
        throw std::invalid_argument("cnf_to_decomposition: literal index out of range");
      }
      BlockPair& p = d.pairs[static_cast<std::size_t>(lit.variable - 1)];
      (lit.positive ? p.first : p.second).push_back(e);
    }
  }
  for (std::size_t i = 0; i < d.pairs.size(); ++i) {
    if (d.pairs[i].first.empty() && d.pairs[i].second.empty()) {
      throw std::invalid_argument("cnf_to_decomposition: variable " +
                                  std::to_string(i + 1) + " never occurs");
    }
  }
  d.ground.elements.reserve(f.clauses.size());
  for (int j = 1; j <= f.clause_count(); ++j) d.ground.elements.push_back(Element{j});
  return d;
}

// Backward map. Requires a valid decomposition; throws
// std::invalid_argument when a ground element lies in no component (which
// a valid decomposition never exhibits).
inline CnfFormula decomposition_to_cnf(const Decomposition& d) {
  if (d.pairs.empty() || d.ground.elements.empty()) {
    throw std::invalid_argument("decomposition_to_cnf: decomposition must have at least one pair and one element");
  }
  CnfFormula f;
  f.variable_count = d.pair_count();
  f.clauses.resize(d.ground.elements.size());
  for (std::size_t idx = 0; idx < d.ground.elements.size(); ++idx) {
    const Element e = d.ground.elements[idx];
    Clause& c = f.clauses[idx];
    for (int j = 0; j < d.pair_count(); ++j) {
      const BlockPair& p = d.pairs[static_cast<std::size_t>(j)];
      if (contains(p.first, e)) c.literals.push_back(Literal{j + 1, true});
      else if (contains(p.second, e)) c.literals.push_back(Literal{j + 1, false});
    }
    if (c.literals.empty()) {
      throw std::invalid_argument("decomposition_to_cnf: element " +
                                  std::to_string(e.index) +
                                  " lies in no component");
    }
  }
  return f;
}

// Stand-in output of the total wrappers on rejected input. It is not a
// valid string of either family (both components of its single pair are
// empty), so downstream recognizers reject it rather than silently
// treating it as an instance.
inline constexpr std::string_view kSentinelText = "~#~";

template <typename T>
struct ReductionOutput {
  std::optional<T> value;     // image when the input was accepted
  ParseError reject_reason;   // why the input was rejected, otherwise empty

  bool accepted() const { return value.has_value(); }
};

struct StringReduction {
  std::string text;          // image string, or kSentinelText
  bool accepted = false;
  ParseError reject_reason;  // meaningful only when !accepted
};

// Total string-to-string forward map: parse, translate, serialize;
// rejected input maps to the sentinel.
inline StringReduction reduce_cnf_string(std::string_view text) {
  auto parsed = parse_cnf(text);
  if (!parsed) {
    return {std::string(kSentinelText), false, parsed.error};
  }
  return {serialize_decomposition(cnf_to_decomposition(*parsed.value)), true, {}};
}

// Total string-to-string backward map; same contract as above.
inline StringReduction reduce_decomposition_string(std::string_view text) {
  auto parsed = parse_decomposition(text);
  if (!parsed) {
    return {std::string(kSentinelText), false, parsed.error};
  }
  return {serialize_cnf(decomposition_to_cnf(*parsed.value)), true, {}};
}

}  // namespace scover
