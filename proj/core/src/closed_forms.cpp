#include "monideal/closed_forms.hpp"

#include <cassert>

#include "monideal/combinatorics.hpp"

namespace monideal {

std::vector<InclusionExclusionTerm> inclusion_exclusion_terms(const VeroneseTypeSpec& spec,
                                                              std::int64_t k) {
  const int n = spec.n();
  if (n > 22)
    throw BudgetError("inclusion_exclusion_terms: 2^" + std::to_string(n) +
                      " subsets exceed the term budget n <= 22");
  std::vector<InclusionExclusionTerm> terms;
  terms.reserve(std::size_t{1} << n);
  for (int j = 0; j <= n; ++j) {
    for_each_subset(n, j, [&](const std::vector<int>& subset) {
      InclusionExclusionTerm term;
      term.subset = subset;
      for (int i : subset) term.penalty += k * spec.a[static_cast<std::size_t>(i - 1)] + 1;
      term.sign = (j % 2 == 0) ? 1 : -1;
      terms.push_back(std::move(term));
    });
  }
  return terms;
}

std::vector<SignedBigCount> mu_terms_by_subset_size(const VeroneseTypeSpec& spec,
                                                    std::int64_t k) {
  const int n = spec.n();
  const std::int64_t kd = k * spec.d;
  std::vector<SignedBigCount> by_size(static_cast<std::size_t>(n) + 1, SignedBigCount{0});
  for (int j = 0; j <= n; ++j) {
    SignedBigCount sum = 0;
    for_each_subset(n, j, [&](const std::vector<int>& subset) {
      std::int64_t penalty = 0;
      for (int i : subset) penalty += k * spec.a[static_cast<std::size_t>(i - 1)] + 1;
      sum += SignedBigCount(binomial(kd + n - 1 - penalty, n - 1));
    });
    by_size[static_cast<std::size_t>(j)] = (j % 2 == 0) ? sum : -sum;
  }
  return by_size;
}

BigCount mu_veronese_type(const VeroneseTypeSpec& spec, std::int64_t k) {
  const VeroneseTypeSpec sk = k == 1 ? spec : scale(spec, k);
  return count_bounded_compositions(sk.d, sk.a);
}

BigCount mu_uniform(std::int64_t c, std::int64_t n, std::int64_t d, std::int64_t k) {
  if (n < 1) return 0;
  SignedBigCount acc = 0;
  for (std::int64_t j = 0; j <= n; ++j) {
    const SignedBigCount term =
        SignedBigCount(binomial(n, j)) * SignedBigCount(binomial(k * d + n - 1 - j * (k * c + 1), n - 1));
    acc += (j % 2 == 0) ? term : -term;
  }
  assert(acc >= 0);
  return BigCount(acc);
}

BigCount mu_cbounded_tspread(const CBoundedTSpreadSpec& spec) {
  const std::int64_t n_reduced = spec.reduced_n();
  if (n_reduced < 1) return 0;
  return mu_uniform(spec.effective_c(), n_reduced, spec.d, 1);
}

BigCount mu_tspread(std::int64_t n, std::int64_t d, std::int64_t t) {
  return binomial(n - (d - 1) * (t - 1), d);
}

BigCount mu_squarefree_power(std::int64_t n, std::int64_t d, std::int64_t k) {
  return mu_uniform(1, n, d, k);
}

SignedBigCount mu_cbounded_tspread_printed(const CBoundedTSpreadSpec& spec) {
  SignedBigCount acc = 0;
  const std::int64_t nt = spec.n - (spec.d - 1) * spec.t;
  const std::int64_t m = spec.n - (spec.d - 1) * (spec.t - 1);
  for (std::int64_t j = 0; j <= spec.d / (spec.c + 1); ++j) {
    const SignedBigCount term =
        SignedBigCount(binomial(nt, j)) * SignedBigCount(binomial(m - j * (spec.c + 1), spec.d));
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

SignedBigCount mu_squarefree_power_printed(std::int64_t n, std::int64_t d, std::int64_t k) {
  SignedBigCount acc = 0;
  for (std::int64_t j = 0; j <= (k * d) / (k + 1); ++j) {
    const SignedBigCount term =
        SignedBigCount(binomial(n, j)) *
        SignedBigCount(binomial(k * d + n - 1 - j * (k + 1), k * d));
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

namespace {

BettiTable make_table3(BigCount b1, BigCount b2, BigCount b3, std::int64_t shift) {
  BettiTable t;
  t.degree_shift = shift;
  t.proj_dim = b3 != 0 ? 3 : (b2 != 0 ? 2 : (b1 != 0 ? 1 : 0));
  t.betti = {std::move(b1), std::move(b2), std::move(b3)};
  return t;
}

}  // namespace

BettiTable betti3_veronese(const VeroneseTypeSpec& spec, std::int64_t k) {
  if (spec.n() != 3) throw std::logic_error("betti3_veronese: spec must have n = 3");
  const VeroneseTypeSpec sk = scale(spec, k);
  if (sk.zero_ideal()) throw std::domain_error("betti3_veronese: zero ideal");
  const BigCount mu = count_bounded_compositions(sk.d, sk.a);
  const std::int64_t kd = sk.d;
  if (mu == 1) return make_table3(1, 0, 0, kd);
  switch (dim3_classify(sk)) {
    case 0:
      return make_table3(mu, BigCount(kd) * (kd + 2), binomial(kd + 1, 2), kd);
    case 1:
      return make_table3(mu, 2 * mu - kd - 2, mu - kd - 1, kd);
    default: {
      // Peel forced-variable factors until the remaining ideal is gcd-free.
      // One x1-strip is not always enough: the inner ideal can again have a
      // variable dividing every generator (e.g. bounds (2,2,1) at d = 4).
      VeroneseTypeSpec core = sk;
      while (dim3_classify(core) == 2) core = factor_x1(core).inner;
      const std::int64_t delta = core.d;
      if (dim3_classify(core) == 0)
        return make_table3(mu, BigCount(delta) * (delta + 2), binomial(delta + 1, 2), kd);
      return make_table3(mu, 2 * mu - delta - 2, mu - delta - 1, kd);
    }
  }
}

BettiTable betti3_cbounded(const CBoundedTSpreadSpec& spec) {
  if (spec.reduced_n() != 3)
    throw std::invalid_argument("betti3_cbounded: requires n-(d-1)t = 3, got " +
                                std::to_string(spec.reduced_n()));
  const std::int64_t c = spec.effective_c();
  return betti3_veronese(normalize_veronese({c, c, c}, 3, spec.d), 1);
}

BigCount betti2_twovars(const BigCount& mu) {
  if (mu == 0) throw std::domain_error("betti2_twovars: zero ideal");
  return mu - 1;
}

}  // namespace monideal
