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

#include <random>
#include <stdexcept>
#include <string>

#include "scover/cnf.hpp"
#include "scover/core.hpp"

// Random instance generation. Every function here is a pure function of
// the generator state: the same seed always yields the same instance on
// every platform, which is why sampling is done with the raw mt19937_64
// output stream instead of std::uniform_int_distribution (whose mapping
// the standard leaves to the implementation).

namespace scover {

using Rng = std::mt19937_64;

// Uniform value in [0, bound). Draws are rejected below the threshold
// 2^64 mod bound so the accepted range is an exact multiple of bound.
inline std::uint64_t rand_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("rand_below: bound must be positive");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

namespace detail {

// How many whole-instance resamples to try before switching to targeted
// repair. Resampling keeps the common case unbiased; repair guarantees
// termination on shapes where a constraint is unlikely to hold by chance
// (for instance many variables and a single short clause).
inline constexpr int kResampleAttempts = 16;

}  // namespace detail

// Random formula with exactly variable_count variables and clause_count
// clauses. Each clause draws every variable independently (positive,
// negated, or absent) and an empty draw is replaced by one random literal.
// Formulas that fail to use every variable are redrawn a few times, after
// which each still-missing variable is appended to a random clause.
inline CnfFormula random_cnf(Rng& rng, int variable_count, int clause_count) {
  if (variable_count < 1 || clause_count < 1) {
    throw std::invalid_argument("random_cnf: counts must be positive");
  }
  const auto n = static_cast<std::size_t>(variable_count);
  const auto m = static_cast<std::size_t>(clause_count);

  std::vector<std::vector<std::int8_t>> polarity;  // -1 absent, 0 negated, 1 positive

  auto draw = [&] {
    polarity.assign(m, std::vector<std::int8_t>(n, -1));
    for (std::size_t j = 0; j < m; ++j) {
      bool nonempty = false;
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t r = rand_below(rng, 4);
        if (r == 0) {
          polarity[j][i] = 1;
          nonempty = true;
        } else if (r == 1) {
          polarity[j][i] = 0;
          nonempty = true;
        }
      }
      if (!nonempty) {
        const std::size_t i = rand_below(rng, n);
        polarity[j][i] = static_cast<std::int8_t>(rand_below(rng, 2));
      }
    }
  };

  auto variable_missing = [&](std::size_t i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (polarity[j][i] >= 0) return false;
    }
    return true;
  };

  auto all_used = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      if (variable_missing(i)) return false;
    }
    return true;
  };

  draw();
  for (int attempt = 0; attempt < detail::kResampleAttempts && !all_used(); ++attempt) {
    draw();
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!variable_missing(i)) continue;
    const std::size_t j = rand_below(rng, m);
    polarity[j][i] = static_cast<std::int8_t>(rand_below(rng, 2));
  }

  CnfFormula f;
  f.variable_count = variable_count;
  f.clauses.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (polarity[j][i] < 0) continue;
      f.clauses[j].literals.push_back(
          Literal{static_cast<int>(i) + 1, polarity[j][i] == 1});
    }
  }
  return f;
}

// Random decomposition with exactly pair_count pairs over the ground set
// {1..element_count}. Each (pair, element) cell draws first / second /
// neither uniformly. Draws violating coverage (some element nowhere) or
// nonemptiness (some pair with both components empty) are redrawn a few
// times, then repaired: uncovered elements are dropped into a random
// component, then still-empty pairs receive one random element each —
// always placeable since such a pair holds nothing yet.
inline Decomposition random_decomposition(Rng& rng, int pair_count, int element_count) {
  if (pair_count < 1 || element_count < 1) {
    throw std::invalid_argument("random_decomposition: counts must be positive");
  }
  const auto n = static_cast<std::size_t>(pair_count);
  const auto m = static_cast<std::size_t>(element_count);

  // cell[j][e]: 0 first component, 1 second, 2 neither
  std::vector<std::vector<std::uint8_t>> cell;

  auto draw = [&] {
    cell.assign(n, std::vector<std::uint8_t>(m));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t e = 0; e < m; ++e) {
        cell[j][e] = static_cast<std::uint8_t>(rand_below(rng, 3));
      }
    }
  };

  auto element_covered = [&](std::size_t e) {
    for (std::size_t j = 0; j < n; ++j) {
      if (cell[j][e] != 2) return true;
    }
    return false;
  };

  auto pair_nonempty = [&](std::size_t j) {
    for (std::size_t e = 0; e < m; ++e) {
      if (cell[j][e] != 2) return true;
    }
    return false;
  };

  auto well_formed = [&] {
    for (std::size_t e = 0; e < m; ++e) {
      if (!element_covered(e)) return false;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!pair_nonempty(j)) return false;
    }
    return true;
  };

  draw();
  for (int attempt = 0; attempt < detail::kResampleAttempts && !well_formed(); ++attempt) {
    draw();
  }
  for (std::size_t e = 0; e < m; ++e) {
    if (element_covered(e)) continue;
    const std::size_t j = rand_below(rng, n);
    cell[j][e] = static_cast<std::uint8_t>(rand_below(rng, 2));
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (pair_nonempty(j)) continue;
    const std::size_t e = rand_below(rng, m);
    cell[j][e] = static_cast<std::uint8_t>(rand_below(rng, 2));
  }

  Decomposition d;
  d.pairs.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t e = 0; e < m; ++e) {
      if (cell[j][e] == 0) d.pairs[j].first.push_back(Element{static_cast<int>(e) + 1});
      else if (cell[j][e] == 1) d.pairs[j].second.push_back(Element{static_cast<int>(e) + 1});
    }
  }
  d.ground.elements.reserve(m);
  for (int e = 1; e <= element_count; ++e) d.ground.elements.push_back(Element{e});
  return d;
}

}  // namespace scover
