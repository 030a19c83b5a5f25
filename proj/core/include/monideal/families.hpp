#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "monideal/exponent_vector.hpp"

namespace monideal {

/// Thrown when an enumeration would exceed its configured size guard.
/// The message always names the budget that was hit.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Generator sets
// ---------------------------------------------------------------------------

/// A finite set of monomial generators over x_1..x_nvars, kept in descending
/// lexicographic order with no duplicates. For the parametric families this is
/// always the minimal generating set of an equigenerated ideal.
struct GeneratorSet {
  int nvars = 0;
  std::vector<ExponentVector> gens;

  bool empty() const { return gens.empty(); }
  std::size_t size() const { return gens.size(); }
  bool operator==(const GeneratorSet&) const = default;
};

bool is_equigenerated(const GeneratorSet& gs);

/// Common total degree of an equigenerated set (0 for the empty set).
std::int64_t common_degree(const GeneratorSet& gs);

/// True when no generator divides another.
bool is_minimal(const GeneratorSet& gs);

/// Sorts descending-lex, removes duplicates and non-minimal elements.
GeneratorSet canonicalize(GeneratorSet gs);

// ---------------------------------------------------------------------------
// Veronese-type ideals: all degree-d monomials with exponents bounded by a.
// ---------------------------------------------------------------------------

/// Parameters of a Veronese-type ideal. Always normalized: entries clamped to
/// d and sorted descending, everything >= 1. The generated ideal, hence every
/// count computed from it, is unchanged by clamping and is permutation
/// equivalent under sorting.
struct VeroneseTypeSpec {
  std::vector<std::int64_t> a;
  std::int64_t d = 0;

  int n() const { return static_cast<int>(a.size()); }
  bool zero_ideal() const {
    return std::accumulate(a.begin(), a.end(), std::int64_t{0}) < d;
  }
  bool operator==(const VeroneseTypeSpec&) const = default;
};

/// Validates and normalizes a raw bound vector (clamp to d, sort descending).
/// Throws std::invalid_argument on a nonpositive entry, wrong length, or d < 1.
VeroneseTypeSpec normalize_veronese(std::vector<std::int64_t> raw_a, int n, std::int64_t d);

/// The spec of the k-th power: the k-th power of a Veronese-type ideal is the
/// Veronese-type ideal with bounds k*a and degree k*d.
VeroneseTypeSpec scale(const VeroneseTypeSpec& spec, std::int64_t k);

/// The minimal generating set: bounded compositions of k*d with bounds k*a,
/// in descending lexicographic order. Empty when the ideal is zero.
GeneratorSet enumerate_generators(const VeroneseTypeSpec& spec, std::int64_t k = 1);

inline constexpr std::uint64_t kDefaultProductBudget = 4'000'000;

/// All distinct exponent-vector sums of k-element multisets of `gs`; the
/// minimal generating set of the k-th power, computed without any power
/// identity. Throws BudgetError when the number of k-multisets exceeds the
/// budget.
GeneratorSet power_products(const GeneratorSet& gs, int k,
                            std::uint64_t product_budget = kDefaultProductBudget);

/// Independent oracle for the power identity: the k-fold products of the
/// generators of I, to be compared against enumerate_generators(spec, k).
GeneratorSet power_generators_oracle(const VeroneseTypeSpec& spec, int k,
                                     std::uint64_t product_budget = kDefaultProductBudget);

// ---------------------------------------------------------------------------
// t-spread multisets and c-bounded t-spread Veronese ideals
// ---------------------------------------------------------------------------

/// A multiset i_1 <= ... <= i_d from {1..n} is t-spread when consecutive
/// entries differ by at least t. Entries must be weakly increasing.
bool is_t_spread(std::span<const int> entries, std::int64_t t);

/// Largest block size: a block is a maximal run of consecutive entries whose
/// gaps are all exactly t. A singleton is a block of size 1; 0 for the empty
/// multiset.
int max_block_size(std::span<const int> entries, std::int64_t t);

/// The standard bijection A_{n,d,t} -> A_{n-(d-1)t,d,0}: i_j -> i_j - (j-1)t.
/// A block of size q with gap t maps to an entry of multiplicity q, so block
/// bounds become multiplicity bounds. Throws std::invalid_argument when the
/// input is not t-spread.
std::vector<int> tspread_shift(std::span<const int> entries, std::int64_t t);

struct CBoundedTSpreadSpec {
  std::int64_t c = 1;
  int n = 1;
  std::int64_t d = 1;
  std::int64_t t = 0;

  std::int64_t effective_c() const { return std::min(c, d); }
  std::int64_t reduced_n() const { return n - (d - 1) * t; }
  bool operator==(const CBoundedTSpreadSpec&) const = default;
};

/// Validates c >= 1, n >= 1, d >= 1, t >= 0.
CBoundedTSpreadSpec make_cbounded_spec(std::int64_t c, int n, std::int64_t d, std::int64_t t);

/// All t-spread multisets of size d from {1..n} whose blocks have size at most
/// block_cap, ascending lexicographic. Pass block_cap >= d for no cap.
std::vector<std::vector<int>> enumerate_tspread_multisets(int n, std::int64_t d, std::int64_t t,
                                                          std::int64_t block_cap);

/// Generators of the c-bounded t-spread Veronese ideal as exponent vectors
/// (multiplicity = exponent). Empty when 1 + (d-1)t > n.
GeneratorSet enumerate_cbounded_tspread(const CBoundedTSpreadSpec& spec);

// ---------------------------------------------------------------------------
// Krull dimension and the dim-2 factorization in three variables
// ---------------------------------------------------------------------------

/// Krull dimension of S/I by the combinatorial rule
/// dim = max{|F| : F subset of {1..n} containing no generator's support}.
/// Returns n for the zero ideal. Brute force over subsets; throws BudgetError
/// for n > 20.
int krull_dim(const GeneratorSet& gs, int n);

/// Dimension of S/I for a normalized three-variable spec, in closed form:
/// 0 iff a = (d,d,d); 2 iff d - (a2+a3) >= 1; else 1.
/// Throws std::domain_error on the zero ideal.
int dim3_classify(const VeroneseTypeSpec& spec);

struct Factorization3 {
  std::int64_t dprime = 0;  // largest l with x_1^l dividing every generator
  std::int64_t delta = 0;   // d - dprime
  VeroneseTypeSpec inner;   // bounds (a1-dprime, a2, a3), degree delta, normalized
};

/// Splits a dim-2 three-variable ideal as I = x_1^{d'} * J with
/// d' = d - (a2+a3). Requires dim3_classify(spec) == 2 and a non-principal
/// ideal (a principal ideal strips to the unit ideal; callers special-case it).
/// Note the inner ideal can itself have dimension 2 again, so reaching the
/// gcd-free core may take several rounds.
Factorization3 factor_x1(const VeroneseTypeSpec& spec);

}  // namespace monideal
