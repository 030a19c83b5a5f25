#pragma once

#include <cstdint>
#include <vector>

#include "monideal/betti_table.hpp"
#include "monideal/bigint.hpp"
#include "monideal/families.hpp"

namespace monideal {

/// One signed term of the inclusion-exclusion sum behind mu_veronese_type:
/// subset J of {1..n}, penalty sum_{i in J}(k*a_i + 1), sign (-1)^|J|.
struct InclusionExclusionTerm {
  std::vector<int> subset;    // ascending, 1-based
  std::int64_t penalty = 0;
  int sign = 1;
};

/// All 2^n inclusion-exclusion terms, subsets in ascending size then
/// lexicographic order. Intended for inspection and structure tests; throws
/// BudgetError for n > 22.
std::vector<InclusionExclusionTerm> inclusion_exclusion_terms(const VeroneseTypeSpec& spec,
                                                              std::int64_t k = 1);

/// Partial sums of mu_veronese_type grouped by subset size |J| = j, i.e. the
/// outer/inner structure of the double sum: entry j holds
/// (-1)^j * sum over j-subsets of C(kd+n-1-penalty, n-1).
std::vector<SignedBigCount> mu_terms_by_subset_size(const VeroneseTypeSpec& spec,
                                                    std::int64_t k = 1);

/// Minimal number of generators of the k-th power of a Veronese-type ideal:
/// sum over subsets J of {1..n} of (-1)^|J| C(kd+n-1-sum_{i in J}(k a_i+1), n-1).
BigCount mu_veronese_type(const VeroneseTypeSpec& spec, std::int64_t k = 1);

/// Uniform-bound special case a = (c,...,c):
/// sum_j (-1)^j C(n,j) C(kd+n-1-j(kc+1), n-1). The sum runs to j = n; terms
/// past the classical cutoff vanish under the binomial convention.
BigCount mu_uniform(std::int64_t c, std::int64_t n, std::int64_t d, std::int64_t k = 1);

/// mu of a c-bounded t-spread Veronese ideal via the Betti-number-preserving
/// reduction to n' = n-(d-1)t variables with t = 0: mu_uniform(min(c,d), n', d).
/// Returns 0 when n' < 1.
BigCount mu_cbounded_tspread(const CBoundedTSpreadSpec& spec);

/// mu of the t-spread Veronese ideal: C(n-(d-1)(t-1), d).
BigCount mu_tspread(std::int64_t n, std::int64_t d, std::int64_t t);

/// mu of the k-th power of the squarefree Veronese ideal; the uniform case
/// with c = 1. Returns 0 when d > n.
BigCount mu_squarefree_power(std::int64_t n, std::int64_t d, std::int64_t k = 1);

// ---------------------------------------------------------------------------
// As-published formula variants. The printed binomials of the c-bounded and
// squarefree statements keep a fixed lower index (d resp. kd) while the
// reduction argument they cite requires n-1; the j = 0 terms coincide, which
// is why three-variable examples never exposed the difference. These forms go
// negative (e.g. -2 where the true count is 6 at n=4, d=2, c=1) and exist
// solely so regression tests can document the discrepancy.
// ---------------------------------------------------------------------------

SignedBigCount mu_cbounded_tspread_printed(const CBoundedTSpreadSpec& spec);
SignedBigCount mu_squarefree_power_printed(std::int64_t n, std::int64_t d, std::int64_t k = 1);

// ---------------------------------------------------------------------------
// Betti numbers beyond beta_1 for small numbers of variables
// ---------------------------------------------------------------------------

/// Full Betti table of S/I^k for a three-variable Veronese-type ideal.
/// beta_1 comes from mu_veronese_type; beta_2, beta_3 depend on dim(S/I):
///   dim 0: beta_2 = kd(kd+2), beta_3 = C(kd+1, 2)
///   dim 1: beta_2 = 2*beta_1 - kd - 2, beta_3 = beta_1 - kd - 1
///   dim 2: the dim-1 formulas applied to the gcd-free core of degree delta
///          (iterated x_1 factorization; a single strip is not always enough).
/// A principal ideal resolves as 0 -> S(-kd) -> S, i.e. (1, 0, 0).
/// Throws std::domain_error on the zero ideal.
BettiTable betti3_veronese(const VeroneseTypeSpec& spec, std::int64_t k = 1);

/// Betti table of a c-bounded t-spread Veronese ideal with n-(d-1)t = 3,
/// through the reduction to the uniform three-variable Veronese-type ideal.
/// Stated for the ideal itself (k = 1 only). Throws std::invalid_argument
/// when n-(d-1)t != 3.
BettiTable betti3_cbounded(const CBoundedTSpreadSpec& spec);

/// In two variables, beta_2 = mu - 1. Throws std::domain_error when mu = 0.
BigCount betti2_twovars(const BigCount& mu);

}  // namespace monideal
