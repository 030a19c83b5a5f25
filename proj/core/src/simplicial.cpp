#include "monideal/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace monideal {

namespace {

bool face_order(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void validate_labels(int n_labels, const std::vector<int>& face) {
  for (int v : face)
    if (v < 1 || v > n_labels)
      throw std::invalid_argument("simplicial complex: vertex label out of range");
}

}  // namespace

SimplicialComplex complex_from_maximal(int n_labels,
                                       const std::vector<std::vector<int>>& maximal) {
  std::set<std::vector<int>> closure;
  for (const auto& raw : maximal) {
    std::vector<int> face = raw;
    std::sort(face.begin(), face.end());
    face.erase(std::unique(face.begin(), face.end()), face.end());
    validate_labels(n_labels, face);
    const std::size_t m = face.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (std::uint64_t{1} << i)) sub.push_back(face[i]);
      closure.insert(std::move(sub));
    }
  }
  SimplicialComplex complex{n_labels, {closure.begin(), closure.end()}};
  std::sort(complex.faces.begin(), complex.faces.end(), face_order);
  return complex;
}

SimplicialComplex make_complex(int n_labels, std::vector<std::vector<int>> faces) {
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    validate_labels(n_labels, f);
  }
  std::sort(faces.begin(), faces.end(), face_order);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  const std::set<std::vector<int>> lookup(faces.begin(), faces.end());
  for (const auto& f : faces) {
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (i != drop) sub.push_back(f[i]);
      if (!lookup.contains(sub))
        throw std::invalid_argument("simplicial complex: face set is not downward closed");
    }
  }
  return SimplicialComplex{n_labels, std::move(faces)};
}

std::vector<std::vector<int>> faces_of_size(const SimplicialComplex& complex, int size) {
  std::vector<std::vector<int>> out;
  for (const auto& f : complex.faces)
    if (static_cast<int>(f.size()) == size) out.push_back(f);
  return out;
}

IntMatrix boundary_matrix(const SimplicialComplex& complex, int k) {
  const auto rows = faces_of_size(complex, k);
  const auto cols = faces_of_size(complex, k + 1);
  std::map<std::vector<int>, std::size_t> row_index;
  for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], r);
  IntMatrix m(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto& face = cols[c];
    for (std::size_t drop = 0; drop < face.size(); ++drop) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < face.size(); ++i)
        if (i != drop) sub.push_back(face[i]);
      const auto it = row_index.find(sub);
      if (it == row_index.end())
        throw std::logic_error("boundary_matrix: complex is not downward closed");
      m[it->second][c] = (drop % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = a.empty() ? 0 : a[0].size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix out(rows, std::vector<std::int64_t>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t l = 0; l < inner; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

int rank_over_q(const IntMatrix& input) {
  const std::size_t rows = input.size();
  const std::size_t cols = rows == 0 ? 0 : input[0].size();
  if (rows == 0 || cols == 0) return 0;
  std::vector<std::vector<SignedBigCount>> m(rows, std::vector<SignedBigCount>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = input[i][j];

  // Bareiss fraction-free elimination; every division is exact.
  SignedBigCount prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j)
        m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

int rank_mod_p(const IntMatrix& input, std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("rank_mod_p: modulus must be a prime >= 2");
  const std::size_t rows = input.size();
  const std::size_t cols = rows == 0 ? 0 : input[0].size();
  if (rows == 0 || cols == 0) return 0;
  const std::int64_t mod = p;
  std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = ((input[i][j] % mod) + mod) % mod;

  auto pow_mod = [mod](std::int64_t base, std::int64_t exp) {
    std::int64_t result = 1;
    base %= mod;
    while (exp > 0) {
      if (exp & 1) result = result * base % mod;
      base = base * base % mod;
      exp >>= 1;
    }
    return result;
  };

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const std::int64_t inv = pow_mod(m[rank][col], mod - 2);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      const std::int64_t factor = m[i][col] * inv % mod;
      for (std::size_t j = col; j < cols; ++j)
        m[i][j] = ((m[i][j] - factor * m[rank][j]) % mod + mod) % mod;
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

ReducedHomology reduced_homology_ranks(const SimplicialComplex& complex,
                                       std::optional<std::uint32_t> prime) {
  ReducedHomology h;
  if (complex.is_void()) return h;

  int max_size = 0;
  for (const auto& f : complex.faces)
    max_size = std::max(max_size, static_cast<int>(f.size()));

  std::vector<int> count(static_cast<std::size_t>(max_size) + 1, 0);
  for (const auto& f : complex.faces) ++count[f.size()];

  // rk[s] = rank of the boundary map from size-s faces to size-(s-1) faces
  std::vector<int> rk(static_cast<std::size_t>(max_size) + 2, 0);
  for (int s = 1; s <= max_size; ++s) {
    const IntMatrix b = boundary_matrix(complex, s - 1);
    rk[static_cast<std::size_t>(s)] = prime ? rank_mod_p(b, *prime) : rank_over_q(b);
  }

  h.rank_neg1 = count[0] - rk[1];
  h.ranks.assign(static_cast<std::size_t>(max_size), 0);
  for (int k = 0; k < max_size; ++k)
    h.ranks[static_cast<std::size_t>(k)] =
        count[static_cast<std::size_t>(k) + 1] - rk[static_cast<std::size_t>(k) + 1] -
        rk[static_cast<std::size_t>(k) + 2];
  return h;
}

}  // namespace monideal
