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

#include <catch2/catch_amalgamated.hpp>

#include "scover/gen.hpp"
#include "scover/reduce.hpp"
#include "support/enumerate.hpp"
#include "support/reference.hpp"

using namespace scover;

TEST_CASE("forward translation matches the hand-derived image", "[reduce]") {
  // f = (x1 or not-x2) and (x2). Variable 1: positive in clause 1 only,
  // never negative -> ({1},{}). Variable 2: positive in clause 2,
  // negative in clause 1 -> ({2},{1}).
  auto f = parse_cnf("x1.1,x0.10*x1.10");
  REQUIRE(f);
  const Decomposition d = cnf_to_decomposition(*f.value);
  REQUIRE(d.pair_count() == 2);
  REQUIRE(d.pairs[0].first == element_set({1}));
  REQUIRE(d.pairs[0].second.empty());
  REQUIRE(d.pairs[1].first == element_set({2}));
  REQUIRE(d.pairs[1].second == element_set({1}));
  REQUIRE(d.ground.elements == element_set({1, 2}));
  REQUIRE(serialize_decomposition(d) == "e.1#~*e.10#e.1");
}

TEST_CASE("forward translation of a three-clause formula", "[reduce]") {
  // f = (x1 or x2) and (not-x1 or x2) and (not-x2). Variable 1: positive
  // in clause 1, negative in clause 2 -> ({1},{2}). Variable 2: positive
  // in clauses 1 and 2, negative in clause 3 -> ({1,2},{3}).
  auto f = parse_cnf("x1.1,x1.10*x0.1,x1.10*x0.10");
  REQUIRE(f);
  const Decomposition d = cnf_to_decomposition(*f.value);
  REQUIRE(serialize_decomposition(d) == "e.1#e.10*e.1,e.10#e.11");
}

TEST_CASE("backward translation matches the hand-derived image", "[reduce]") {
  // element 1 sits in pair 1 first and pair 2 second -> clause (x1, not-x2);
  // element 2 sits in pair 2 first -> clause (x2)
  auto d = parse_decomposition("e.1#~*e.10#e.1");
  REQUIRE(d);
  const CnfFormula f = decomposition_to_cnf(*d.value);
  REQUIRE(f.variable_count == 2);
  REQUIRE(f.clause_count() == 2);
  REQUIRE(serialize_cnf(f) == "x1.1,x0.10*x1.10");
}

TEST_CASE("the two translations are mutually inverse on goldens", "[reduce]") {
  auto f = parse_cnf("x1.1,x1.10*x0.1,x1.10*x0.10");
  REQUIRE(f);
  REQUIRE(decomposition_to_cnf(cnf_to_decomposition(*f.value)) == *f.value);

  auto d = parse_decomposition("e.1#e.10*e.1,e.10#e.11");
  REQUIRE(d);
  REQUIRE(cnf_to_decomposition(decomposition_to_cnf(*d.value)) == *d.value);
}

TEST_CASE("the two translations are mutually inverse on random instances", "[reduce]") {
  Rng rng(11);
  for (int k = 0; k < 500; ++k) {
    const int n = 1 + static_cast<int>(rand_below(rng, 10));
    const int m = 1 + static_cast<int>(rand_below(rng, 15));
    const CnfFormula f = random_cnf(rng, n, m);
    REQUIRE(decomposition_to_cnf(cnf_to_decomposition(f)) == f);
    const Decomposition d = random_decomposition(rng, n, m);
    REQUIRE(cnf_to_decomposition(decomposition_to_cnf(d)) == d);
  }
}

TEST_CASE("forward images are valid decompositions", "[reduce]") {
  Rng rng(12);
  for (int k = 0; k < 300; ++k) {
    const int n = 1 + static_cast<int>(rand_below(rng, 10));
    const int m = 1 + static_cast<int>(rand_below(rng, 15));
    const Decomposition d = cnf_to_decomposition(random_cnf(rng, n, m));
    REQUIRE(validate_decomposition(d.pairs, d.ground));
  }
}

TEST_CASE("backward images are well-formed formulas", "[reduce]") {
  Rng rng(13);
  for (int k = 0; k < 300; ++k) {
    const int n = 1 + static_cast<int>(rand_below(rng, 10));
    const int m = 1 + static_cast<int>(rand_below(rng, 15));
    const CnfFormula f = decomposition_to_cnf(random_decomposition(rng, n, m));
    REQUIRE(every_variable_occurs(f));
    auto reparsed = parse_cnf(serialize_cnf(f));
    REQUIRE(reparsed);
    REQUIRE(*reparsed.value == f);
  }
}

TEST_CASE("satisfying an instance and covering its image coincide pointwise",
          "[reduce]") {
  // exhaustively for every small formula and every assignment: setting a
  // variable true selects the clauses where it occurs positively, false
  // the ones where it occurs negatively, and all clauses must be hit
  for (int n = 1; n <= 2; ++n) {
    for (int m = 1; m <= 3; ++m) {
      enumerate::for_each_formula(n, m, [&](const CnfFormula& f) {
        const Decomposition d = cnf_to_decomposition(f);
        enumerate::for_each_selection(n, [&](const Selection& s) {
          REQUIRE(evaluate(f, s) == is_covering(d, s));
        });
      });
    }
  }
  // and mirrored, starting from every small decomposition
  for (int n = 1; n <= 2; ++n) {
    for (int m = 1; m <= 3; ++m) {
      enumerate::for_each_decomposition(n, m, [&](const Decomposition& d) {
        const CnfFormula f = decomposition_to_cnf(d);
        enumerate::for_each_selection(n, [&](const Selection& s) {
          REQUIRE(is_covering(d, s) == evaluate(f, s));
        });
      });
    }
  }
}

TEST_CASE("the translation is a bijection between the two small families", "[reduce]") {
  // the two enumerators are written independently (clause tuples vs
  // per-cell states); a mutually-inverse pair of maps forces the families
  // to be exactly the same size, which pins both enumerators as well
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      long formulas = 0;
      long decompositions = 0;
      enumerate::for_each_formula(n, m, [&](const CnfFormula&) { ++formulas; });
      enumerate::for_each_decomposition(n, m,
                                        [&](const Decomposition&) { ++decompositions; });
      INFO("n=" << n << " m=" << m);
      REQUIRE(formulas == decompositions);
    }
  }
}

TEST_CASE("forward translation demands that every variable occurs", "[reduce]") {
  // variable 2 declared but absent: pair 2 would be double-empty
  const CnfFormula f = make_cnf(2, {{1}});
  REQUIRE_THROWS_AS(cnf_to_decomposition(f), std::invalid_argument);

  CnfFormula empty;
  empty.variable_count = 0;
  REQUIRE_THROWS_AS(cnf_to_decomposition(empty), std::invalid_argument);

  Decomposition none;
  REQUIRE_THROWS_AS(decomposition_to_cnf(none), std::invalid_argument);
}

TEST_CASE("string-level translation is total via the sentinel", "[reduce]") {
  const StringReduction good = reduce_cnf_string("x1.1,x0.10*x1.10");
  REQUIRE(good.accepted);
  REQUIRE(good.text == "e.1#~*e.10#e.1");

  const StringReduction back = reduce_decomposition_string("e.1#~*e.10#e.1");
  REQUIRE(back.accepted);
  REQUIRE(back.text == "x1.1,x0.10*x1.10");

  const StringReduction junk = reduce_cnf_string("garbage");
  REQUIRE_FALSE(junk.accepted);
  REQUIRE(junk.text == kSentinelText);
  REQUIRE(junk.reject_reason.message == "unexpected byte 'g'");

  // the sentinel is itself outside both languages, so feeding it back in
  // rejects again instead of being mistaken for an instance
  REQUIRE_FALSE(parse_decomposition(kSentinelText));
  const StringReduction resent = reduce_decomposition_string(kSentinelText);
  REQUIRE_FALSE(resent.accepted);
  REQUIRE(resent.text == kSentinelText);

  const StringReduction wrong_family = reduce_decomposition_string("x1.1");
  REQUIRE_FALSE(wrong_family.accepted);
  REQUIRE(wrong_family.text == kSentinelText);
}

TEST_CASE("string-level round-trip returns the canonical input", "[reduce]") {
  Rng rng(14);
  for (int k = 0; k < 300; ++k) {
    const int n = 1 + static_cast<int>(rand_below(rng, 8));
    const int m = 1 + static_cast<int>(rand_below(rng, 10));
    const std::string sf = serialize_cnf(random_cnf(rng, n, m));
    const StringReduction fwd = reduce_cnf_string(sf);
    REQUIRE(fwd.accepted);
    const StringReduction back = reduce_decomposition_string(fwd.text);
    REQUIRE(back.accepted);
    REQUIRE(back.text == sf);
  }
}

TEST_CASE("translation output grows linearly in the input token count", "[reduce]") {
  // every literal becomes one element occurrence: the image holds L
  // elements plus at most 3n separator/epsilon tokens, and L >= n because
  // every variable occurs, so the image never exceeds 4L <= 4x the input
  // token count. Spot-checked here; the quadratic ceiling is measured in
  // the acceptance gate.
  Rng rng(15);
  for (int k = 0; k < 100; ++k) {
    const int n = 1 + static_cast<int>(rand_below(rng, 10));
    const int m = 1 + static_cast<int>(rand_below(rng, 15));
    const std::string sf = serialize_cnf(random_cnf(rng, n, m));
    const StringReduction fwd = reduce_cnf_string(sf);
    const std::size_t in_len = *token_length(sf).value;
    const std::size_t out_len = *token_length(fwd.text).value;
    REQUIRE(out_len <= 4 * in_len);
  }
}
