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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Set-side domain model: ground sets, paired decompositions into block
// pairs, selections that pick one component per pair, and the covering
// predicates and transformations defined on them.
//
// All values are immutable after construction and every operation is a
// pure function of its inputs.

namespace scover {

// An abstract set member, named by a positive index.
struct Element {
  int index = 0;  // >= 1

  friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

// Sorted ascending, duplicate-free. Components and ground sets share this
// representation; set semantics are by membership, never by position.
using ElementSet = std::vector<Element>;

inline ElementSet element_set(std::initializer_list<int> indices) {
  ElementSet s;
  s.reserve(indices.size());
  for (int i : indices) s.push_back(Element{i});
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool contains(const ElementSet& s, Element e) {
  return std::binary_search(s.begin(), s.end(), e);
}

inline bool disjoint(const ElementSet& a, const ElementSet& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      return false;
    }
  }
  return true;
}

inline ElementSet merged(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

// The set being decomposed and covered. Must be nonempty for a valid
// decomposition; emptiness is reported by validate_decomposition.
struct GroundSet {
  ElementSet elements;

  int size() const { return static_cast<int>(elements.size()); }

  friend bool operator==(const GroundSet&, const GroundSet&) = default;
};

// One ordered pair of the decomposition. Validity (disjoint, not both
// empty) is a property of the whole decomposition, checked by
// validate_decomposition, not enforced per pair.
struct BlockPair {
  ElementSet first;
  ElementSet second;

  friend bool operator==(const BlockPair&, const BlockPair&) = default;
};

struct Decomposition {
  std::vector<BlockPair> pairs;
  GroundSet ground;

  int pair_count() const { return static_cast<int>(pairs.size()); }
  int element_count() const { return ground.size(); }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// One bit per pair: 1 selects the first component, 0 the second. The same
// vector doubles as a truth assignment, bit k giving the value of the
// variable numbered k+1.
struct Selection {
  std::vector<std::uint8_t> bits;

  static Selection of(std::initializer_list<int> values) {
    Selection s;
    s.bits.reserve(values.size());
    for (int v : values) s.bits.push_back(v ? 1 : 0);
    return s;
  }

  int size() const { return static_cast<int>(bits.size()); }
  bool first_selected(int position) const { return bits[position] != 0; }

  friend bool operator==(const Selection&, const Selection&) = default;
};

// Which decomposition rule a candidate input breaks.
enum class DecompositionRule {
  ComponentsOverlap,    // a pair's components share an element
  BothComponentsEmpty,  // a pair with two empty components
  CoverageMismatch,     // union of all components differs from the ground set
  EmptyDecomposition,   // no pairs at all
};

struct DecompositionViolation {
  DecompositionRule rule;
  int pair = 0;  // 1-based pair number; 0 when not tied to a pair
  std::string detail;
};

struct ValidationOutcome {
  std::optional<Decomposition> value;
  std::optional<DecompositionViolation> violation;

  explicit operator bool() const { return value.has_value(); }
};

namespace detail {

inline std::string element_list(const ElementSet& s) {
  std::string out;
  for (const Element& e : s) {
    if (!out.empty()) out += ", ";
    out += "element " + std::to_string(e.index);
  }
  return out;
}

}  // namespace detail

// Checks the three decomposition rules and returns the checked value, or
// the first violation with pairs scanned in ascending order: overlapping
// components first, then double-empty pairs, then the coverage rule.
inline ValidationOutcome validate_decomposition(std::vector<BlockPair> pairs,
                                                GroundSet ground) {
  if (pairs.empty()) {
    return {std::nullopt,
            DecompositionViolation{DecompositionRule::EmptyDecomposition, 0,
                                   "a decomposition needs at least one pair"}};
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!disjoint(pairs[i].first, pairs[i].second)) {
      ElementSet shared;
      std::set_intersection(pairs[i].first.begin(), pairs[i].first.end(),
                            pairs[i].second.begin(), pairs[i].second.end(),
                            std::back_inserter(shared));
      return {std::nullopt,
              DecompositionViolation{
                  DecompositionRule::ComponentsOverlap, static_cast<int>(i + 1),
                  "pair " + std::to_string(i + 1) +
                      ": components not disjoint (" +
                      detail::element_list(shared) + ")"}};
    }
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].first.empty() && pairs[i].second.empty()) {
      return {std::nullopt,
              DecompositionViolation{DecompositionRule::BothComponentsEmpty,
                                     static_cast<int>(i + 1),
                                     "pair " + std::to_string(i + 1) +
                                         ": both components empty"}};
    }
  }
  ElementSet all;
  for (const BlockPair& p : pairs) {
    all = merged(all, merged(p.first, p.second));
  }
  if (all != ground.elements) {
    ElementSet missing;  // in ground but in no component
    std::set_difference(ground.elements.begin(), ground.elements.end(),
                        all.begin(), all.end(), std::back_inserter(missing));
    ElementSet excess;  // in some component but not in ground
    std::set_difference(all.begin(), all.end(), ground.elements.begin(),
                        ground.elements.end(), std::back_inserter(excess));
    std::string detail = "components do not cover the ground set exactly";
    if (!missing.empty()) detail += "; uncovered: " + detail::element_list(missing);
    if (!excess.empty()) detail += "; outside ground: " + detail::element_list(excess);
    return {std::nullopt,
            DecompositionViolation{DecompositionRule::CoverageMismatch, 0,
                                   std::move(detail)}};
  }
  return {Decomposition{std::move(pairs), std::move(ground)}, std::nullopt};
}

inline void require_selection_size(const Decomposition& d, const Selection& s,
                                   const char* where) {
  if (s.size() != d.pair_count()) {
    throw std::invalid_argument(std::string(where) +
                                ": selection length != pair count");
  }
}

// True iff the union of the selected components equals the ground set.
inline bool is_covering(const Decomposition& d, const Selection& s) {
  require_selection_size(d, s, "is_covering");
  ElementSet covered;
  for (int i = 0; i < d.pair_count(); ++i) {
    covered = merged(covered, s.first_selected(i) ? d.pairs[i].first
                                                  : d.pairs[i].second);
  }
  return covered == d.ground.elements;
}

// Equivalent covering test stated element-by-element: every member of every
// rejected component must appear in a component selected at some other
// pair. Kept as a literal second route; agreement with is_covering on valid
// decompositions is a test target, so this must not call is_covering.
inline bool is_covering_elementwise(const Decomposition& d,
                                    const Selection& s) {
  require_selection_size(d, s, "is_covering_elementwise");
  const int n = d.pair_count();
  for (int i = 0; i < n; ++i) {
    const ElementSet& rejected =
        s.first_selected(i) ? d.pairs[i].second : d.pairs[i].first;
    for (const Element& e : rejected) {
      bool found = false;
      for (int j = 0; j < n && !found; ++j) {
        if (j == i) continue;
        const ElementSet& chosen =
            s.first_selected(j) ? d.pairs[j].first : d.pairs[j].second;
        found = contains(chosen, e);
      }
      if (!found) return false;
    }
  }
  return true;
}

struct ForcedChoice {
  int pair = 0;       // 1-based pair number
  bool first = true;  // which component is forced into every covering

  friend bool operator==(const ForcedChoice&, const ForcedChoice&) = default;
};

struct InferenceOutcome {
  std::vector<ForcedChoice> forced;
  std::optional<int> infeasible_pair;  // 1-based witness

  bool infeasible() const { return infeasible_pair.has_value(); }
};

// Single application of the private-element rule: a component holding an
// element that occurs nowhere else must be selected by every covering. A
// pair with both components forced proves that no covering exists.
inline InferenceOutcome infer_forced(const Decomposition& d) {
  const int n = d.pair_count();
  // occurrences[e] counts how many components across all pairs contain e
  std::vector<std::pair<Element, int>> occurrences;
  for (const Element& e : d.ground.elements) occurrences.push_back({e, 0});
  auto count_of = [&](Element e) -> int* {
    auto it = std::lower_bound(
        occurrences.begin(), occurrences.end(), e,
        [](const auto& entry, Element key) { return entry.first < key; });
    return (it != occurrences.end() && it->first == e) ? &it->second : nullptr;
  };
  for (const BlockPair& p : d.pairs) {
    for (const Element& e : p.first)
      if (int* c = count_of(e)) ++*c;
    for (const Element& e : p.second)
      if (int* c = count_of(e)) ++*c;
  }
  auto has_private = [&](const ElementSet& component) {
    for (const Element& e : component) {
      const int* c = count_of(e);
      if (c && *c == 1) return true;
    }
    return false;
  };

  InferenceOutcome out;
  for (int i = 0; i < n; ++i) {
    const bool first_forced = has_private(d.pairs[i].first);
    const bool second_forced = has_private(d.pairs[i].second);
    if (first_forced) out.forced.push_back({i + 1, true});
    if (second_forced) out.forced.push_back({i + 1, false});
    if (first_forced && second_forced && !out.infeasible_pair) {
      out.infeasible_pair = i + 1;
    }
  }
  return out;
}

// Reorders the pairs: order[k] is the 1-based number of the pair that moves
// into place k+1. Pair contents are untouched.
inline Decomposition permute_pairs(const Decomposition& d,
                                   const std::vector<int>& order) {
  const int n = d.pair_count();
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument("permute_pairs: order length != pair count");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int src : order) {
    if (src < 1 || src > n || seen[static_cast<std::size_t>(src - 1)]) {
      throw std::invalid_argument("permute_pairs: order is not a permutation");
    }
    seen[static_cast<std::size_t>(src - 1)] = true;
  }
  Decomposition out;
  out.ground = d.ground;
  out.pairs.reserve(static_cast<std::size_t>(n));
  for (int src : order) out.pairs.push_back(d.pairs[static_cast<std::size_t>(src - 1)]);
  return out;
}

// Swaps the two components within the listed pairs (1-based numbers,
// duplicates tolerated as a set); pair order is unchanged.
inline Decomposition flip_components(const Decomposition& d,
                                     const std::vector<int>& pairs_to_flip) {
  const int n = d.pair_count();
  std::vector<bool> flip(static_cast<std::size_t>(n), false);
  for (int p : pairs_to_flip) {
    if (p < 1 || p > n) {
      throw std::invalid_argument("flip_components: pair number out of range");
    }
    flip[static_cast<std::size_t>(p - 1)] = true;
  }
  Decomposition out;
  out.ground = d.ground;
  out.pairs.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (flip[static_cast<std::size_t>(i)]) {
      out.pairs.push_back(BlockPair{d.pairs[static_cast<std::size_t>(i)].second,
                                    d.pairs[static_cast<std::size_t>(i)].first});
    } else {
      out.pairs.push_back(d.pairs[static_cast<std::size_t>(i)]);
    }
  }
  return out;
}

// Rewrites a covering into an all-first-component covering of the flipped
// decomposition: every pair whose second component was selected gets its
// components swapped. Requires that s already covers d.
inline std::pair<Decomposition, Selection> normalize_to_first(
    const Decomposition& d, const Selection& s) {
  if (!is_covering(d, s)) {
    throw std::invalid_argument("normalize_to_first: selection is not a covering");
  }
  std::vector<int> flips;
  for (int i = 0; i < d.pair_count(); ++i) {
    if (!s.first_selected(i)) flips.push_back(i + 1);
  }
  Selection all_first;
  all_first.bits.assign(static_cast<std::size_t>(d.pair_count()), 1);
  return {flip_components(d, flips), std::move(all_first)};
}

}  // namespace scover
