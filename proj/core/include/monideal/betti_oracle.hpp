#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monideal/betti_table.hpp"
#include "monideal/exponent_vector.hpp"
#include "monideal/families.hpp"
#include "monideal/simplicial.hpp"

namespace monideal {

/// The lcm lattice (minus its bottom element): every distinct coordinatewise
/// maximum over nonempty generator subsets. These are the only multidegrees
/// where Betti numbers can live.
using MultidegreeLattice = std::vector<ExponentVector>;

struct OracleOptions {
  /// Hard cap on |G(I)|; the lattice and the per-multidegree homology work
  /// grow too fast beyond this.
  std::size_t generator_budget = 16;
  /// Compute homology over GF(prime) instead of Q. The target families have
  /// characteristic-independent (linear) resolutions, so this is for
  /// experimentation only.
  std::optional<std::uint32_t> prime;
};

/// Joins are accumulated by iterative closure against the generators rather
/// than by enumerating all 2^mu subsets. Result sorted by total degree, then
/// ascending lexicographic. Throws BudgetError over the generator budget.
MultidegreeLattice lcm_lattice(const GeneratorSet& gens, std::size_t generator_budget = 16);

/// The upper Koszul complex of I at multidegree b: the complex on the support
/// of b whose faces are exactly the squarefree vectors tau <= supp(b) with
/// x^{b-tau} in I (some generator divides it).
SimplicialComplex upper_koszul_complex(const GeneratorSet& gens, const ExponentVector& b);

/// Ground-truth Betti numbers of S/I for an arbitrary small monomial ideal:
/// beta_{i,b}(S/I) = rank of reduced H_{i-2} of the upper Koszul complex at b,
/// summed over the lcm lattice. The index offset is pinned by the Koszul
/// calibration beta_i(S/(x_1..x_n)) = C(n,i). For equigenerated input the
/// table's `linear` flag records whether every beta_i sat in the single
/// expected degree shift + i - 1.
BettiTable betti_numbers_oracle(const GeneratorSet& gens, const OracleOptions& options = {});

}  // namespace monideal
