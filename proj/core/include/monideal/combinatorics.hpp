#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "monideal/bigint.hpp"
#include "monideal/exponent_vector.hpp"

namespace monideal {

/// Binomial coefficient C(m, r) with the vanishing convention:
/// the result is 0 whenever r < 0 or m < r (negative m included).
/// Every sum in this library leans on that convention instead of
/// feasibility pre-checks, so infeasible terms silently drop out.
BigCount binomial(std::int64_t m, std::int64_t r);

// ---------------------------------------------------------------------------
// j-subsets of {1..n}, ascending lexicographic: {1,2} < {1,3} < {2,3}.
// The order is part of the contract; golden tests depend on it.
// ---------------------------------------------------------------------------

/// Writes the lexicographically first j-subset into `out`.
/// Returns false (empty stream) when j < 0 or j > n.
bool first_combination(int n, int j, std::vector<int>& out);

/// Advances `comb` to its lexicographic successor; false when exhausted.
bool next_combination(int n, std::vector<int>& comb);

template <typename Visit>
void for_each_subset(int n, int j, Visit&& visit) {
  std::vector<int> comb;
  if (!first_combination(n, j, comb)) return;
  do {
    visit(static_cast<const std::vector<int>&>(comb));
  } while (next_combination(n, comb));
}

// ---------------------------------------------------------------------------
// Bounded compositions: vectors b with sum(b) = total and 0 <= b_i <= bounds_i,
// in descending lexicographic order (greedy-first), e.g. for total = 3 and
// bounds (2,1,1): (2,1,0), (2,0,1), (1,1,1).
// ---------------------------------------------------------------------------

/// Writes the lexicographically largest bounded composition into `out`.
/// Returns false when no composition exists.
bool first_bounded_composition(std::int64_t total, std::span<const std::int64_t> bounds,
                               ExponentVector& out);

/// Advances `b` to the next composition in descending lex order.
bool next_bounded_composition(std::span<const std::int64_t> bounds, ExponentVector& b);

template <typename Visit>
void for_each_bounded_composition(std::int64_t total, std::span<const std::int64_t> bounds,
                                  Visit&& visit) {
  ExponentVector b;
  if (!first_bounded_composition(total, bounds, b)) return;
  do {
    visit(static_cast<const ExponentVector&>(b));
  } while (next_bounded_composition(bounds, b));
}

/// Number of bounded compositions of `total`, by inclusion-exclusion over the
/// violated upper bounds: sum over J of (-1)^|J| C(total+n-1-sum_{i in J}(bounds_i+1), n-1).
/// Subtrees whose penalty already exceeds `total` are pruned; their binomials
/// all vanish. Exact for every input.
BigCount count_bounded_compositions(std::int64_t total, std::span<const std::int64_t> bounds);

}  // namespace monideal
