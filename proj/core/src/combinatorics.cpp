#include "monideal/combinatorics.hpp"

#include <algorithm>
#include <cassert>

namespace monideal {

BigCount binomial(std::int64_t m, std::int64_t r) {
  if (r < 0 || m < r) return 0;
  r = std::min(r, m - r);  // m >= r >= 0 here, so m - r >= 0
  BigCount result = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    result *= (m - r + i);
    result /= i;  // exact: i consecutive integers are divisible by i!
  }
  return result;
}

bool first_combination(int n, int j, std::vector<int>& out) {
  if (j < 0 || j > n) return false;
  out.resize(static_cast<std::size_t>(j));
  for (int i = 0; i < j; ++i) out[static_cast<std::size_t>(i)] = i + 1;
  return true;
}

bool next_combination(int n, std::vector<int>& comb) {
  const int j = static_cast<int>(comb.size());
  for (int i = j - 1; i >= 0; --i) {
    // entry i may grow up to n - (j - 1 - i)
    if (comb[static_cast<std::size_t>(i)] < n - (j - 1 - i)) {
      ++comb[static_cast<std::size_t>(i)];
      for (int l = i + 1; l < j; ++l)
        comb[static_cast<std::size_t>(l)] = comb[static_cast<std::size_t>(l - 1)] + 1;
      return true;
    }
  }
  return false;
}

bool first_bounded_composition(std::int64_t total, std::span<const std::int64_t> bounds,
                               ExponentVector& out) {
  if (total < 0) return false;
  const std::size_t n = bounds.size();
  out.assign(n, 0);
  std::int64_t rest = total;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::min(bounds[i], rest);
    rest -= out[i];
  }
  return rest == 0;
}

bool next_bounded_composition(std::span<const std::int64_t> bounds, ExponentVector& b) {
  const int n = static_cast<int>(b.size());
  if (n == 0) return false;
  std::int64_t suffix_sum = b[static_cast<std::size_t>(n - 1)];
  std::int64_t suffix_cap = bounds[static_cast<std::size_t>(n - 1)];
  for (int i = n - 2; i >= 0; --i) {
    const std::size_t ui = static_cast<std::size_t>(i);
    if (b[ui] > 0 && suffix_sum + 1 <= suffix_cap) {
      --b[ui];
      std::int64_t rest = suffix_sum + 1;
      for (std::size_t l = ui + 1; l < static_cast<std::size_t>(n); ++l) {
        b[l] = std::min(bounds[l], rest);
        rest -= b[l];
      }
      return true;
    }
    suffix_sum += b[ui];
    suffix_cap += bounds[ui];
  }
  return false;
}

namespace {

void accumulate_signed_terms(std::span<const std::int64_t> bounds, std::int64_t total, int n,
                             std::size_t index, std::int64_t penalty, int sign,
                             SignedBigCount& acc) {
  if (index == bounds.size()) {
    const BigCount term = binomial(total + n - 1 - penalty, n - 1);
    if (sign > 0)
      acc += term;
    else
      acc -= term;
    return;
  }
  accumulate_signed_terms(bounds, total, n, index + 1, penalty, sign, acc);
  const std::int64_t grown = penalty + bounds[index] + 1;
  // penalty > total makes this term and all its supersets vanish
  if (grown <= total)
    accumulate_signed_terms(bounds, total, n, index + 1, grown, -sign, acc);
}

}  // namespace

BigCount count_bounded_compositions(std::int64_t total, std::span<const std::int64_t> bounds) {
  if (total < 0) return 0;
  const int n = static_cast<int>(bounds.size());
  if (n == 0) return total == 0 ? 1 : 0;
  SignedBigCount acc = 0;
  accumulate_signed_terms(bounds, total, n, 0, 0, +1, acc);
  assert(acc >= 0);
  return BigCount(acc);
}

}  // namespace monideal
