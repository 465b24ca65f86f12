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

#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "scover/codec.hpp"
#include "scover/gen.hpp"
#include "support/reference.hpp"

using namespace scover;

TEST_CASE("tokenize reports the offset of the broken byte", "[codec]") {
  auto bad = tokenize("x1.1q");
  REQUIRE_FALSE(bad);
  REQUIRE(bad.error.offset == 4);
  REQUIRE(bad.error.message == "unexpected byte 'q'");

  auto no_polarity = tokenize("x2.1");
  REQUIRE_FALSE(no_polarity);
  REQUIRE(no_polarity.error.offset == 1);

  auto no_dot = tokenize("x11");
  REQUIRE_FALSE(no_dot);
  REQUIRE(no_dot.error.offset == 2);

  auto no_index = tokenize("e.");
  REQUIRE_FALSE(no_index);
  REQUIRE(no_index.error.offset == 2);
  REQUIRE(no_index.error.message == "expected binary index");
}

TEST_CASE("indices are canonical binary numerals", "[codec]") {
  // leading zeros are not part of the grammar
  auto zero = parse_cnf("x1.01");
  REQUIRE_FALSE(zero);
  REQUIRE(zero.error.offset == 3);
  REQUIRE(zero.error.message == "index has a leading zero");

  // 31 one-bits exceed the index width cap
  auto huge = parse_cnf("x1." + std::string(31, '1'));
  REQUIRE_FALSE(huge);
  REQUIRE(huge.error.message == "index too large");
  REQUIRE(huge.error.offset == 3);

  // 30 bits decode fine at the tokenizer level; the range rule then
  // rejects the gap
  auto wide = parse_cnf("x1.1" + std::string(29, '0'));
  REQUIRE_FALSE(wide);
  REQUIRE_THAT(wide.error.message,
               Catch::Matchers::ContainsSubstring("variable-count mismatch"));
}

TEST_CASE("parse_cnf builds the hand-derived structure", "[codec]") {
  // (x1 or not-x2) and (x2): two clauses, two variables
  auto parsed = parse_cnf("x1.1,x0.10*x1.10");
  REQUIRE(parsed);
  const CnfFormula& f = *parsed.value;
  REQUIRE(f.variable_count == 2);
  REQUIRE(f.clause_count() == 2);
  REQUIRE(f.clauses[0].literals ==
          std::vector<Literal>{Literal{1, true}, Literal{2, false}});
  REQUIRE(f.clauses[1].literals == std::vector<Literal>{Literal{2, true}});
}

TEST_CASE("parse_cnf accepts any literal order and serializes ascending", "[codec]") {
  auto parsed = parse_cnf("x0.10,x1.1*x1.10");
  REQUIRE(parsed);
  REQUIRE(serialize_cnf(*parsed.value) == "x1.1,x0.10*x1.10");
}

TEST_CASE("parse_cnf rejections carry the rule and the offset", "[codec]") {
  struct Case {
    const char* text;
    std::size_t offset;
    const char* message;
  };
  const Case cases[] = {
      {"", 0, "empty input: a clause needs at least one literal"},
      {"x1.1,", 5, "empty clause: literal expected"},
      {"x1.1*", 5, "empty clause: literal expected"},
      {"x1.1**x1.1", 5, "empty clause: literal expected"},
      {",x1.1", 0, "empty clause: literal expected"},
      {"x1.1x1.10", 4, "expected ',' or '*' after literal"},
      {"x1.1,x1.1", 5, "duplicate literal in clause"},
      {"x1.1,x0.1", 5, "clause contains a variable and its negation"},
      {"e.1#~", 0, "empty clause: literal expected"},
  };
  for (const Case& c : cases) {
    INFO(c.text);
    auto parsed = parse_cnf(c.text);
    REQUIRE_FALSE(parsed);
    REQUIRE(parsed.error.offset == c.offset);
    REQUIRE(parsed.error.message == c.message);
  }

  // the same literal may repeat across clauses, just not within one
  REQUIRE(parse_cnf("x1.1*x1.1"));
}

TEST_CASE("parse_cnf requires variable numbers to be exactly 1..n", "[codec]") {
  // variables {1,3}: 3 appears but 2 never does
  auto gap = parse_cnf("x1.1*x1.11");
  REQUIRE_FALSE(gap);
  REQUIRE(gap.error.message ==
          "variable-count mismatch: index 3 occurs but index 2 does not");
  REQUIRE(gap.error.offset == 5);  // the literal that overshot the count

  // variables {2}: no variable 1 at all
  auto no_one = parse_cnf("x1.10");
  REQUIRE_FALSE(no_one);
  REQUIRE(no_one.error.message ==
          "variable-count mismatch: index 2 occurs but index 1 does not");
}

TEST_CASE("parse_decomposition builds the hand-derived structure", "[codec]") {
  auto parsed = parse_decomposition("e.1#~*e.10#e.1");
  REQUIRE(parsed);
  const Decomposition& d = *parsed.value;
  REQUIRE(d.pair_count() == 2);
  REQUIRE(d.element_count() == 2);
  REQUIRE(d.pairs[0].first == element_set({1}));
  REQUIRE(d.pairs[0].second.empty());
  REQUIRE(d.pairs[1].first == element_set({2}));
  REQUIRE(d.pairs[1].second == element_set({1}));
  REQUIRE(d.ground.elements == element_set({1, 2}));
}

TEST_CASE("parse_decomposition accepts any element order and serializes ascending",
          "[codec]") {
  auto parsed = parse_decomposition("e.10,e.1#e.11*e.11#e.1,e.10");
  REQUIRE(parsed);
  REQUIRE(serialize_decomposition(*parsed.value) == "e.1,e.10#e.11*e.11#e.1,e.10");
}

TEST_CASE("parse_decomposition rejections carry the rule and the offset", "[codec]") {
  struct Case {
    const char* text;
    std::size_t offset;
    const char* message;
  };
  const Case cases[] = {
      {"", 0, "empty input: a pair expected"},
      {"e.1", 3, "expected '#' between pair components"},
      {"e.1#", 4, "component expected"},
      {"e.1#e.10*", 9, "component expected"},
      {"e.1#e.10e.1", 8, "expected '*' between pairs"},
      {"e.1,e.1#e.10", 4, "duplicate element in component"},
      {"e.1#e.1", 0, "pair 1: components not disjoint"},
      {"~#~", 0, "pair 1: both components empty"},
      {"e.1#~*~#~", 6, "pair 2: both components empty"},
      {"e.1#~*e.1#e.10,e.10", 15, "duplicate element in component"},
      {"x1.1", 0, "element expected"},  // wrong family: literal token leads
  };
  for (const Case& c : cases) {
    INFO(c.text);
    auto parsed = parse_decomposition(c.text);
    REQUIRE_FALSE(parsed);
    REQUIRE(parsed.error.offset == c.offset);
    REQUIRE(parsed.error.message == c.message);
  }

  // "~" is one empty component, not two: a pair may use it on either side
  REQUIRE(parse_decomposition("~#e.1"));
  REQUIRE(parse_decomposition("e.1#~"));
}

TEST_CASE("parse_decomposition requires element numbers to be exactly 1..m", "[codec]") {
  auto gap = parse_decomposition("e.1#e.11");
  REQUIRE_FALSE(gap);
  REQUIRE(gap.error.message ==
          "element-count mismatch: element 3 occurs but element 2 does not");
  REQUIRE(gap.error.offset == 4);
}

TEST_CASE("an element may sit in components of different pairs", "[codec]") {
  // disjointness binds within one pair only
  auto parsed = parse_decomposition("e.1#e.10*e.1,e.10#~");
  REQUIRE(parsed);
  REQUIRE(parsed.value->pairs[1].first == element_set({1, 2}));
}

TEST_CASE("serialization round-trips through parsing on random instances", "[codec]") {
  Rng rng(7);
  for (int k = 0; k < 400; ++k) {
    const int n = 1 + static_cast<int>(rand_below(rng, 9));
    const int m = 1 + static_cast<int>(rand_below(rng, 12));

    const CnfFormula f = random_cnf(rng, n, m);
    const std::string sf = serialize_cnf(f);
    auto pf = parse_cnf(sf);
    REQUIRE(pf);
    REQUIRE(*pf.value == f);
    REQUIRE(serialize_cnf(*pf.value) == sf);  // canonical form is a fixed point

    const Decomposition d = random_decomposition(rng, n, m);
    const std::string sd = serialize_decomposition(d);
    auto pd = parse_decomposition(sd);
    REQUIRE(pd);
    REQUIRE(*pd.value == d);
    REQUIRE(serialize_decomposition(*pd.value) == sd);
  }
}

TEST_CASE("parsers agree with the definition-level slow recognizers", "[codec]") {
  // a quick cross-check on goldens; the large randomized comparison runs
  // in the acceptance gate
  const char* cnf_cases[] = {"x1.1,x0.10*x1.10", "x1.1", "x1.1,x0.1",
                             "x1.01",            "",     "x1.1*x1.11"};
  for (const char* text : cnf_cases) {
    INFO(text);
    REQUIRE(static_cast<bool>(parse_cnf(text)) == refcheck::accepts_cnf(text));
  }
  const char* dec_cases[] = {"e.1#~*e.10#e.1", "~#~",     "e.1#e.1",
                             "e.1#e.10",       "~#e.1",   "e.1#e.11",
                             "e.1#",           "e.1#e.10*e.1,e.10#~"};
  for (const char* text : dec_cases) {
    INFO(text);
    REQUIRE(static_cast<bool>(parse_decomposition(text)) ==
            refcheck::accepts_decomposition(text));
  }
}

TEST_CASE("token_length counts tokens, not bytes", "[codec]") {
  // literals and clause separators count; commas and index digits do not
  auto cnf = token_length("x1.1,x0.10*x1.10");
  REQUIRE(cnf);
  REQUIRE(*cnf.value == 4);  // 3 literals + 1 star

  auto single = token_length("x1.1");
  REQUIRE(single);
  REQUIRE(*single.value == 1);

  // elements, epsilons, boxes and stars count on the other side
  auto dec = token_length("e.1#~*e.10#e.1");
  REQUIRE(dec);
  REQUIRE(*dec.value == 7);  // 3 elements + 1 epsilon + 2 boxes + 1 star

  auto eps = token_length("~#e.1");
  REQUIRE(eps);
  REQUIRE(*eps.value == 3);

  auto junk = token_length("x1.1q");
  REQUIRE_FALSE(junk);
  REQUIRE(junk.error.offset == 4);

  auto empty = token_length("");
  REQUIRE(empty);
  REQUIRE(*empty.value == 0);
}
