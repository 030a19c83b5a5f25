#include "monideal/families.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

#include "monideal/combinatorics.hpp"

namespace monideal {

bool is_equigenerated(const GeneratorSet& gs) {
  if (gs.gens.empty()) return true;
  const std::int64_t d = total_degree(gs.gens.front());
  return std::all_of(gs.gens.begin(), gs.gens.end(),
                     [d](const ExponentVector& g) { return total_degree(g) == d; });
}

std::int64_t common_degree(const GeneratorSet& gs) {
  return gs.gens.empty() ? 0 : total_degree(gs.gens.front());
}

bool is_minimal(const GeneratorSet& gs) {
  for (std::size_t i = 0; i < gs.gens.size(); ++i)
    for (std::size_t j = 0; j < gs.gens.size(); ++j)
      if (i != j && divides(gs.gens[i], gs.gens[j])) return false;
  return true;
}

GeneratorSet canonicalize(GeneratorSet gs) {
  std::sort(gs.gens.begin(), gs.gens.end(), std::greater<>());
  gs.gens.erase(std::unique(gs.gens.begin(), gs.gens.end()), gs.gens.end());
  std::vector<ExponentVector> minimal;
  for (const auto& g : gs.gens) {
    bool dominated = false;
    for (const auto& h : gs.gens)
      if (h != g && divides(h, g)) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(g);
  }
  gs.gens = std::move(minimal);
  return gs;
}

VeroneseTypeSpec normalize_veronese(std::vector<std::int64_t> raw_a, int n, std::int64_t d) {
  if (n < 1) throw std::invalid_argument("veronese spec: n must be >= 1");
  if (d < 1) throw std::invalid_argument("veronese spec: d must be >= 1");
  if (static_cast<int>(raw_a.size()) != n)
    throw std::invalid_argument("veronese spec: bound vector has length " +
                                std::to_string(raw_a.size()) + ", expected n = " +
                                std::to_string(n));
  for (std::int64_t ai : raw_a)
    if (ai < 1) throw std::invalid_argument("veronese spec: bounds must be positive");
  for (std::int64_t& ai : raw_a) ai = std::min(ai, d);
  std::sort(raw_a.begin(), raw_a.end(), std::greater<>());
  return VeroneseTypeSpec{std::move(raw_a), d};
}

VeroneseTypeSpec scale(const VeroneseTypeSpec& spec, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("power k must be >= 1");
  VeroneseTypeSpec scaled = spec;
  scaled.d *= k;
  for (std::int64_t& ai : scaled.a) ai *= k;
  return scaled;
}

GeneratorSet enumerate_generators(const VeroneseTypeSpec& spec, std::int64_t k) {
  const VeroneseTypeSpec sk = k == 1 ? spec : scale(spec, k);
  GeneratorSet gs;
  gs.nvars = sk.n();
  for_each_bounded_composition(sk.d, sk.a,
                               [&gs](const ExponentVector& b) { gs.gens.push_back(b); });
  return gs;
}

GeneratorSet power_products(const GeneratorSet& gs, int k, std::uint64_t product_budget) {
  if (k < 1) throw std::invalid_argument("power k must be >= 1");
  if (gs.empty()) return GeneratorSet{gs.nvars, {}};
  // k-element multisets suffice; sums are order independent
  const BigCount multisets = binomial(static_cast<std::int64_t>(gs.size()) + k - 1, k);
  if (multisets > product_budget)
    throw BudgetError("power oracle: " + multisets.str() + " k-fold products exceed budget " +
                      std::to_string(product_budget));
  std::set<ExponentVector> sums;
  ExponentVector current(static_cast<std::size_t>(gs.nvars), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    if (left == 0) {
      sums.insert(current);
      return;
    }
    for (std::size_t i = from; i < gs.gens.size(); ++i) {
      for (std::size_t v = 0; v < current.size(); ++v) current[v] += gs.gens[i][v];
      rec(i, left - 1);
      for (std::size_t v = 0; v < current.size(); ++v) current[v] -= gs.gens[i][v];
    }
  };
  rec(0, k);
  GeneratorSet out{gs.nvars, {sums.begin(), sums.end()}};
  return canonicalize(std::move(out));
}

GeneratorSet power_generators_oracle(const VeroneseTypeSpec& spec, int k,
                                     std::uint64_t product_budget) {
  return power_products(enumerate_generators(spec), k, product_budget);
}

bool is_t_spread(std::span<const int> entries, std::int64_t t) {
  for (std::size_t j = 0; j + 1 < entries.size(); ++j) {
    if (entries[j + 1] < entries[j])
      throw std::invalid_argument("t-spread check: entries must be weakly increasing");
    if (entries[j + 1] - entries[j] < t) return false;
  }
  return true;
}

int max_block_size(std::span<const int> entries, std::int64_t t) {
  if (entries.empty()) return 0;
  int best = 1, run = 1;
  for (std::size_t j = 0; j + 1 < entries.size(); ++j) {
    run = (entries[j + 1] - entries[j] == t) ? run + 1 : 1;
    best = std::max(best, run);
  }
  return best;
}

std::vector<int> tspread_shift(std::span<const int> entries, std::int64_t t) {
  if (!is_t_spread(entries, t))
    throw std::invalid_argument("tspread_shift: input multiset is not t-spread");
  std::vector<int> shifted(entries.begin(), entries.end());
  for (std::size_t j = 0; j < shifted.size(); ++j)
    shifted[j] -= static_cast<int>(static_cast<std::int64_t>(j) * t);
  return shifted;
}

CBoundedTSpreadSpec make_cbounded_spec(std::int64_t c, int n, std::int64_t d, std::int64_t t) {
  if (c < 1) throw std::invalid_argument("c-bounded spec: c must be >= 1");
  if (n < 1) throw std::invalid_argument("c-bounded spec: n must be >= 1");
  if (d < 1) throw std::invalid_argument("c-bounded spec: d must be >= 1");
  if (t < 0) throw std::invalid_argument("c-bounded spec: t must be >= 0");
  return CBoundedTSpreadSpec{c, n, d, t};
}

std::vector<std::vector<int>> enumerate_tspread_multisets(int n, std::int64_t d, std::int64_t t,
                                                          std::int64_t block_cap) {
  std::vector<std::vector<int>> out;
  if (d < 1 || n < 1 || block_cap < 1) return out;
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(d));
  // run = size of the current block (entries at gap exactly t)
  std::function<void(int, int)> rec = [&](int min_next, int run) {
    if (static_cast<std::int64_t>(entries.size()) == d) {
      out.push_back(entries);
      return;
    }
    for (int v = min_next; v <= n; ++v) {
      const bool extends = !entries.empty() && v - entries.back() == t;
      const int next_run = extends ? run + 1 : 1;
      if (next_run > block_cap) continue;
      entries.push_back(v);
      rec(static_cast<int>(v + t), next_run);
      entries.pop_back();
    }
  };
  rec(1, 0);
  return out;
}

GeneratorSet enumerate_cbounded_tspread(const CBoundedTSpreadSpec& spec) {
  const auto multisets =
      enumerate_tspread_multisets(spec.n, spec.d, spec.t, spec.effective_c());
  GeneratorSet gs;
  gs.nvars = spec.n;
  gs.gens.reserve(multisets.size());
  for (const auto& m : multisets) {
    ExponentVector b(static_cast<std::size_t>(spec.n), 0);
    for (int v : m) ++b[static_cast<std::size_t>(v - 1)];
    gs.gens.push_back(std::move(b));
  }
  std::sort(gs.gens.begin(), gs.gens.end(), std::greater<>());
  return gs;
}

int krull_dim(const GeneratorSet& gs, int n) {
  if (n < 0 || n > 20)
    throw BudgetError("krull_dim: n = " + std::to_string(n) + " exceeds the subset budget n <= 20");
  std::vector<std::uint32_t> supports;
  supports.reserve(gs.gens.size());
  for (const auto& g : gs.gens) {
    std::uint32_t mask = 0;
    for (int i = 0; i < n; ++i)
      if (g[static_cast<std::size_t>(i)] > 0) mask |= (1u << i);
    supports.push_back(mask);
  }
  int best = -1;
  for (std::uint32_t f = 0; f < (1u << n); ++f) {
    bool avoids = true;
    for (std::uint32_t s : supports)
      if ((s & ~f) == 0) {  // support contained in f
        avoids = false;
        break;
      }
    if (avoids) best = std::max(best, std::popcount(f));
  }
  return best;  // n for the zero ideal: every subset qualifies
}

int dim3_classify(const VeroneseTypeSpec& spec) {
  if (spec.n() != 3) throw std::logic_error("dim3_classify: spec must have n = 3");
  if (spec.zero_ideal()) throw std::domain_error("dim3_classify: zero ideal");
  if (spec.a[2] >= spec.d) return 0;  // normalized, so this means a = (d,d,d)
  if (spec.d - (spec.a[1] + spec.a[2]) >= 1) return 2;
  return 1;
}

Factorization3 factor_x1(const VeroneseTypeSpec& spec) {
  if (dim3_classify(spec) != 2)
    throw std::logic_error("factor_x1: requires a dim-2 spec");
  const std::int64_t sum = spec.a[0] + spec.a[1] + spec.a[2];
  if (sum == spec.d)
    throw std::invalid_argument("factor_x1: principal ideal strips to the unit ideal");
  const std::int64_t dprime = spec.d - (spec.a[1] + spec.a[2]);
  Factorization3 f;
  f.dprime = dprime;
  f.delta = spec.d - dprime;
  f.inner = normalize_veronese({spec.a[0] - dprime, spec.a[1], spec.a[2]}, 3, f.delta);
  return f;
}

}  // namespace monideal
