#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace monideal {

/// A monomial x_1^{b_1} ... x_n^{b_n} as its exponent vector.
using ExponentVector = std::vector<std::int64_t>;

inline std::int64_t total_degree(std::span<const std::int64_t> b) {
  return std::accumulate(b.begin(), b.end(), std::int64_t{0});
}

/// Coordinatewise divisibility: x^g | x^b.
inline bool divides(std::span<const std::int64_t> g, std::span<const std::int64_t> b) {
  if (g.size() != b.size()) return false;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] > b[i]) return false;
  return true;
}

/// Coordinatewise max, i.e. the exponent vector of lcm(x^a, x^b).
inline ExponentVector join(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

/// 1-based indices of the variables actually occurring in x^b.
inline std::vector<int> support(std::span<const std::int64_t> b) {
  std::vector<int> s;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] > 0) s.push_back(static_cast<int>(i) + 1);
  return s;
}

}  // namespace monideal
