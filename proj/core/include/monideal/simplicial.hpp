#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monideal/bigint.hpp"

namespace monideal {

/// An abstract simplicial complex on vertex labels 1..n_labels. `faces` holds
/// every face (vertices ascending), including the empty face for any nonvoid
/// complex; the set is downward closed. Faces are kept sorted by size, then
/// lexicographically — the documented boundary-matrix order.
struct SimplicialComplex {
  int n_labels = 0;
  std::vector<std::vector<int>> faces;

  bool is_void() const { return faces.empty(); }
  bool operator==(const SimplicialComplex&) const = default;
};

/// Builds a complex as the downward closure of the given maximal faces.
SimplicialComplex complex_from_maximal(int n_labels,
                                       const std::vector<std::vector<int>>& maximal);

/// Canonicalizes an explicit face list (sorts, dedupes) and verifies downward
/// closure; throws std::invalid_argument when a subset is missing.
SimplicialComplex make_complex(int n_labels, std::vector<std::vector<int>> faces);

std::vector<std::vector<int>> faces_of_size(const SimplicialComplex& complex, int size);

/// Dense integer matrix, row major. Rows/cols may be zero.
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Boundary map from chain dimension k to k-1, i.e. from faces of size k+1 to
/// faces of size k (k = 0 maps vertices onto the empty face). Rows and columns
/// follow the complex's face order; dropping the vertex at position p
/// contributes sign (-1)^p.
IntMatrix boundary_matrix(const SimplicialComplex& complex, int k);

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

/// Rank over the rationals via fraction-free (Bareiss) elimination on exact
/// integers.
int rank_over_q(const IntMatrix& m);

/// Rank over GF(p). p must be an odd-or-2 prime less than 2^31.
int rank_mod_p(const IntMatrix& m, std::uint32_t p);

struct ReducedHomology {
  /// Rank of reduced H_{-1}: 1 exactly for the complex whose only face is the
  /// empty one, else 0.
  int rank_neg1 = 0;
  /// ranks[k] = rank of reduced H_k, k = 0..dim.
  std::vector<int> ranks;
};

/// Reduced homology ranks over Q (or GF(prime) when given), computed from
/// exact boundary-matrix ranks with the empty face included in dimension -1.
ReducedHomology reduced_homology_ranks(const SimplicialComplex& complex,
                                       std::optional<std::uint32_t> prime = std::nullopt);

}  // namespace monideal
