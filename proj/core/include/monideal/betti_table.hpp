#pragma once

#include <cstdint>
#include <vector>

#include "monideal/bigint.hpp"

namespace monideal {

/// Betti numbers of S/I^k. betti[i-1] holds beta_i; beta_0 = 1 is implied.
/// For the families handled here the resolution is linear, so beta_i sits in
/// the single degree degree_shift + i - 1.
struct BettiTable {
  std::vector<BigCount> betti;
  std::int64_t degree_shift = 0;  // degree of the generators (kd)
  int proj_dim = 0;               // largest i with beta_i != 0
  bool linear = true;             // oracle clears this if a shift lands off the line

  BigCount beta(int i) const {
    if (i < 1 || i > static_cast<int>(betti.size())) return 0;
    return betti[static_cast<std::size_t>(i - 1)];
  }

  /// 1 - beta_1 + beta_2 - ... ; zero for any nonzero ideal.
  SignedBigCount alternating_sum() const {
    SignedBigCount s = 1;
    int sign = -1;
    for (const BigCount& b : betti) {
      s += sign * SignedBigCount(b);
      sign = -sign;
    }
    return s;
  }
};

}  // namespace monideal
