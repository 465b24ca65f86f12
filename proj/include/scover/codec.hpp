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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scover/cnf.hpp"
#include "scover/core.hpp"

// Interchange text format. One line, 7-bit ASCII, no whitespace.
//
//   index      ::= "1" ("0" | "1")*          binary, MSB first, no leading zeros
//   literal    ::= ("x1." | "x0.") index     x1. positive, x0. negated
//   element    ::= "e." index
//   clause     ::= literal ("," literal)*
//   formula    ::= clause ("*" clause)*
//   component  ::= "~" | element ("," element)*
//   pair       ::= component "#" component
//   layout     ::= pair ("*" pair)*
//
// A formula string is accepted when every clause has pairwise distinct
// variables (in particular never a variable and its negation) and the
// variable numbers used are exactly 1..n. A layout string is accepted when
// each pair has disjoint, not-both-empty components, no component repeats
// an element, and the element numbers used are exactly 1..m. n and m are
// always computed from the string, never declared.
//
// Canonical output orders literals and elements ascending; parsing accepts
// any order, so serialize(parse(w)) is the canonical form of w and is a
// fixed point of another round trip.

namespace scover {

struct ParseError {
  std::size_t offset = 0;  // byte offset, 0-based
  std::string message;
};

template <typename T>
struct ParseResult {
  std::optional<T> value;
  ParseError error;  // meaningful only when !value

  explicit operator bool() const { return value.has_value(); }
};

enum class TokenKind : std::uint8_t { Literal, Element, Star, Box, Epsilon, Comma };

struct Token {
  TokenKind kind;
  bool positive = false;  // literal polarity
  int index = 0;          // decoded literal/element index
  std::size_t offset = 0; // byte offset of the first byte of the token
};

namespace detail {

// Indices above this many bits are rejected outright; any accepted string
// needs indices no larger than its own token count, so the cap only cuts
// off junk input before it can overflow.
inline constexpr int kMaxIndexBits = 30;

inline ParseResult<std::vector<Token>> fail_tokens(std::size_t offset,
                                                   std::string message) {
  return {std::nullopt, ParseError{offset, std::move(message)}};
}

inline bool read_index(std::string_view text, std::size_t& pos, int& out,
                       ParseError& err) {
  const std::size_t start = pos;
  if (pos >= text.size() || (text[pos] != '0' && text[pos] != '1')) {
    err = {pos, "expected binary index"};
    return false;
  }
  if (text[pos] == '0') {
    err = {pos, "index has a leading zero"};
    return false;
  }
  std::uint64_t value = 0;
  int bits = 0;
  while (pos < text.size() && (text[pos] == '0' || text[pos] == '1')) {
    value = (value << 1) | static_cast<std::uint64_t>(text[pos] - '0');
    ++bits;
    ++pos;
  }
  if (bits > kMaxIndexBits) {
    err = {start, "index too large"};
    return false;
  }
  out = static_cast<int>(value);
  return true;
}

}  // namespace detail

inline ParseResult<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    const char c = text[pos];
    switch (c) {
      case 'x': {
        ++pos;
        if (pos >= text.size() || (text[pos] != '0' && text[pos] != '1')) {
          return detail::fail_tokens(pos, "expected polarity 0 or 1 after 'x'");
        }
        const bool positive = text[pos] == '1';
        ++pos;
        if (pos >= text.size() || text[pos] != '.') {
          return detail::fail_tokens(pos, "expected '.' before literal index");
        }
        ++pos;
        int index = 0;
        ParseError err;
        if (!detail::read_index(text, pos, index, err)) {
          return {std::nullopt, err};
        }
        tokens.push_back(Token{TokenKind::Literal, positive, index, start});
        break;
      }
      case 'e': {
        ++pos;
        if (pos >= text.size() || text[pos] != '.') {
          return detail::fail_tokens(pos, "expected '.' before element index");
        }
        ++pos;
        int index = 0;
        ParseError err;
        if (!detail::read_index(text, pos, index, err)) {
          return {std::nullopt, err};
        }
        tokens.push_back(Token{TokenKind::Element, false, index, start});
        break;
      }
      case '*':
        tokens.push_back(Token{TokenKind::Star, false, 0, start});
        ++pos;
        break;
      case '#':
        tokens.push_back(Token{TokenKind::Box, false, 0, start});
        ++pos;
        break;
      case '~':
        tokens.push_back(Token{TokenKind::Epsilon, false, 0, start});
        ++pos;
        break;
      case ',':
        tokens.push_back(Token{TokenKind::Comma, false, 0, start});
        ++pos;
        break;
      default:
        return detail::fail_tokens(pos, std::string("unexpected byte '") + c + "'");
    }
  }
  return {std::move(tokens), ParseError{}};
}

namespace detail {

// Indices used so far, as a presence bitmap plus the running maximum and
// the first token whose index exceeds the final distinct count (the
// witness printed for a gapped range).
struct IndexRange {
  std::vector<bool> seen;
  int distinct = 0;

  void note(int index) {
    if (index >= static_cast<int>(seen.size())) {
      seen.resize(static_cast<std::size_t>(index) + 1, false);
    }
    if (!seen[static_cast<std::size_t>(index)]) {
      seen[static_cast<std::size_t>(index)] = true;
      ++distinct;
    }
  }

  int max_index() const {
    for (int i = static_cast<int>(seen.size()) - 1; i >= 1; --i) {
      if (seen[static_cast<std::size_t>(i)]) return i;
    }
    return 0;
  }

  int first_missing() const {
    for (int i = 1; i < static_cast<int>(seen.size()); ++i) {
      if (!seen[static_cast<std::size_t>(i)]) return i;
    }
    return static_cast<int>(seen.size());
  }

  bool contiguous() const { return max_index() == distinct; }
};

inline void append_binary(std::string& out, int value) {
  char buf[33];
  int len = 0;
  while (value > 0) {
    buf[len++] = static_cast<char>('0' + (value & 1));
    value >>= 1;
  }
  while (len > 0) out += buf[--len];
}

}  // namespace detail

// Recognizer and parser for formula strings. Accepts exactly the strings
// described in the header comment; rejection carries the byte offset and
// the broken rule.
inline ParseResult<CnfFormula> parse_cnf(std::string_view text) {
  auto toks = tokenize(text);
  if (!toks) return {std::nullopt, toks.error};
  const std::vector<Token>& tokens = *toks.value;

  if (tokens.empty()) {
    return {std::nullopt, ParseError{0, "empty input: a clause needs at least one literal"}};
  }

  CnfFormula f;
  detail::IndexRange range;
  std::optional<Token> gap_witness;

  Clause current;
  std::vector<std::pair<int, bool>> seen_in_clause;  // (variable, polarity)
  std::size_t i = 0;
  bool expect_literal = true;
  while (true) {
    if (expect_literal) {
      if (i >= tokens.size()) {
        return {std::nullopt, ParseError{text.size(), "empty clause: literal expected"}};
      }
      const Token& t = tokens[i];
      if (t.kind != TokenKind::Literal) {
        return {std::nullopt, ParseError{t.offset, "empty clause: literal expected"}};
      }
      for (const auto& [var, pol] : seen_in_clause) {
        if (var != t.index) continue;
        if (pol == t.positive) {
          return {std::nullopt,
                  ParseError{t.offset, "duplicate literal in clause"}};
        }
        return {std::nullopt,
                ParseError{t.offset,
                           "clause contains a variable and its negation"}};
      }
      seen_in_clause.push_back({t.index, t.positive});
      current.literals.push_back(Literal{t.index, t.positive});
      range.note(t.index);
      if (!gap_witness && t.index > range.distinct) gap_witness = t;
      ++i;
      expect_literal = false;
      continue;
    }
    if (i >= tokens.size() || tokens[i].kind == TokenKind::Star) {
      std::sort(current.literals.begin(), current.literals.end());
      f.clauses.push_back(std::move(current));
      current = Clause{};
      seen_in_clause.clear();
      if (i >= tokens.size()) break;
      ++i;  // consume the star
      expect_literal = true;
      continue;
    }
    if (tokens[i].kind == TokenKind::Comma) {
      ++i;
      expect_literal = true;
      continue;
    }
    return {std::nullopt,
            ParseError{tokens[i].offset, "expected ',' or '*' after literal"}};
  }

  if (!range.contiguous()) {
    // every index above the distinct count witnesses the gap; report the
    // first one seen
    std::size_t off = 0;
    int idx = range.max_index();
    if (gap_witness && gap_witness->index > range.distinct) {
      off = gap_witness->offset;
      idx = gap_witness->index;
    }
    return {std::nullopt,
            ParseError{off, "variable-count mismatch: index " +
                                std::to_string(idx) + " occurs but index " +
                                std::to_string(range.first_missing()) +
                                " does not"}};
  }
  f.variable_count = range.distinct;
  return {std::move(f), ParseError{}};
}

inline std::string serialize_cnf(const CnfFormula& f) {
  std::string out;
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    if (j > 0) out += '*';
    const Clause& c = f.clauses[j];
    for (std::size_t k = 0; k < c.literals.size(); ++k) {
      if (k > 0) out += ',';
      out += c.literals[k].positive ? "x1." : "x0.";
      detail::append_binary(out, c.literals[k].variable);
    }
  }
  return out;
}

// Recognizer and parser for decomposition strings. Acceptance guarantees a
// valid decomposition: per-pair disjointness and nonemptiness are checked
// here and the ground set is the union of all components, so the coverage
// rule holds by construction.
inline ParseResult<Decomposition> parse_decomposition(std::string_view text) {
  auto toks = tokenize(text);
  if (!toks) return {std::nullopt, toks.error};
  const std::vector<Token>& tokens = *toks.value;

  if (tokens.empty()) {
    return {std::nullopt, ParseError{0, "empty input: a pair expected"}};
  }

  std::vector<BlockPair> pairs;
  detail::IndexRange range;
  std::optional<Token> gap_witness;

  std::size_t i = 0;
  while (true) {
    BlockPair pair;
    bool first_epsilon = false;
    bool second_epsilon = false;
    std::size_t pair_offset = i < tokens.size() ? tokens[i].offset : text.size();

    // one component; sets the epsilon flag when written as "~"
    auto read_component = [&](ElementSet& out, bool& is_epsilon) -> std::optional<ParseError> {
      if (i >= tokens.size()) {
        return ParseError{text.size(), "component expected"};
      }
      if (tokens[i].kind == TokenKind::Epsilon) {
        is_epsilon = true;
        ++i;
        return std::nullopt;
      }
      while (true) {
        if (i >= tokens.size() || tokens[i].kind != TokenKind::Element) {
          return ParseError{i < tokens.size() ? tokens[i].offset : text.size(),
                            "element expected"};
        }
        const Token& t = tokens[i];
        const Element e{t.index};
        if (contains(out, e)) {
          return ParseError{t.offset, "duplicate element in component"};
        }
        out.insert(std::lower_bound(out.begin(), out.end(), e), e);
        range.note(t.index);
        if (!gap_witness && t.index > range.distinct) gap_witness = t;
        ++i;
        if (i < tokens.size() && tokens[i].kind == TokenKind::Comma) {
          ++i;
          continue;
        }
        return std::nullopt;
      }
    };

    if (auto err = read_component(pair.first, first_epsilon)) {
      return {std::nullopt, *err};
    }
    if (i >= tokens.size() || tokens[i].kind != TokenKind::Box) {
      return {std::nullopt,
              ParseError{i < tokens.size() ? tokens[i].offset : text.size(),
                         "expected '#' between pair components"}};
    }
    ++i;
    if (auto err = read_component(pair.second, second_epsilon)) {
      return {std::nullopt, *err};
    }

    const int pair_number = static_cast<int>(pairs.size()) + 1;
    if (first_epsilon && second_epsilon) {
      return {std::nullopt,
              ParseError{pair_offset, "pair " + std::to_string(pair_number) +
                                          ": both components empty"}};
    }
    if (!disjoint(pair.first, pair.second)) {
      return {std::nullopt,
              ParseError{pair_offset, "pair " + std::to_string(pair_number) +
                                          ": components not disjoint"}};
    }
    pairs.push_back(std::move(pair));

    if (i >= tokens.size()) break;
    if (tokens[i].kind != TokenKind::Star) {
      return {std::nullopt,
              ParseError{tokens[i].offset, "expected '*' between pairs"}};
    }
    ++i;
  }

  if (!range.contiguous()) {
    std::size_t off = 0;
    int idx = range.max_index();
    if (gap_witness && gap_witness->index > range.distinct) {
      off = gap_witness->offset;
      idx = gap_witness->index;
    }
    return {std::nullopt,
            ParseError{off, "element-count mismatch: element " +
                                std::to_string(idx) + " occurs but element " +
                                std::to_string(range.first_missing()) +
                                " does not"}};
  }

  GroundSet ground;
  ground.elements.reserve(static_cast<std::size_t>(range.distinct));
  for (int e = 1; e <= range.distinct; ++e) ground.elements.push_back(Element{e});
  return {Decomposition{std::move(pairs), std::move(ground)}, ParseError{}};
}

inline std::string serialize_decomposition(const Decomposition& d) {
  std::string out;
  auto append_component = [&out](const ElementSet& s) {
    if (s.empty()) {
      out += '~';
      return;
    }
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (k > 0) out += ',';
      out += "e.";
      detail::append_binary(out, s[k].index);
    }
  };
  for (std::size_t i = 0; i < d.pairs.size(); ++i) {
    if (i > 0) out += '*';
    append_component(d.pairs[i].first);
    out += '#';
    append_component(d.pairs[i].second);
  }
  return out;
}

// Token-count length measure. Formula strings count literals and '*';
// layout strings count elements, '~', '#' and '*'. Commas and the bytes
// inside a token never count. The string family is read off the first
// token.
inline ParseResult<std::size_t> token_length(std::string_view text) {
  auto toks = tokenize(text);
  if (!toks) return {std::nullopt, toks.error};
  const std::vector<Token>& tokens = *toks.value;
  if (tokens.empty()) return {std::size_t{0}, ParseError{}};

  std::size_t count = 0;
  if (tokens.front().kind == TokenKind::Literal) {
    for (const Token& t : tokens) {
      if (t.kind == TokenKind::Literal || t.kind == TokenKind::Star) ++count;
    }
  } else {
    for (const Token& t : tokens) {
      switch (t.kind) {
        case TokenKind::Element:
        case TokenKind::Epsilon:
        case TokenKind::Box:
        case TokenKind::Star:
          ++count;
          break;
        default:
          break;
      }
    }
  }
  return {count, ParseError{}};
}

}  // namespace scover
