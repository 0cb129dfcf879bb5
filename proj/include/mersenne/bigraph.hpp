#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mersenne/bigint.hpp"
#include "mersenne/circulant.hpp"

namespace mersenne::bigraph {

using circulant::CirculantMatrix;
using circulant::DenseBitMatrix;

inline constexpr std::size_t kRyserMaxN = 20;
inline constexpr std::size_t kPermutationSumMaxN = 10;
inline constexpr std::size_t kPermanentParityMaxN = 30;

/// (p, p) labeled bipartite graph on a_1..a_p, b_1..b_p whose biadjacency
/// matrix is circulant: a_i ~ b_j iff entry (i, j) is 1.
class BipartiteCirculantGraph {
public:
  explicit BipartiteCirculantGraph(CirculantMatrix biadjacency) : m_(std::move(biadjacency)) {}

  static BipartiteCirculantGraph from_column(std::string_view bits, std::size_t p) {
    return BipartiteCirculantGraph(CirculantMatrix::from_column(bits, p));
  }

  [[nodiscard]] std::size_t side() const { return m_.size(); }
  [[nodiscard]] const CirculantMatrix& biadjacency() const { return m_; }
  [[nodiscard]] bool has_edge(std::size_t i, std::size_t j) const { return m_.entry(i, j); }
  /// First-column bitstring of the biadjacency matrix.
  [[nodiscard]] std::string to_bitstring() const { return m_.to_bitstring(); }

private:
  CirculantMatrix m_;
};

/// For each a_i (0-based), the 0-based indices j of its neighbours b_j.
std::vector<std::vector<std::size_t>> adjacency_list(const BipartiteCirculantGraph& g);

/// Parity of the number of perfect matchings: det over GF(2) of the biadjacency.
int matching_parity(const BipartiteCirculantGraph& g);

/// Ryser inclusion-exclusion in Gray-code order. Throws BudgetExceeded for n > 20.
BigInt permanent_ryser(const DenseBitMatrix& m);
/// Sum over all n! permutations. Throws BudgetExceeded for n > 10.
BigInt permanent_permutation_sum(const DenseBitMatrix& m);
/// Exact number of perfect matchings (Ryser).
BigInt exact_permanent(const DenseBitMatrix& m);
/// perm(m) mod 2 by Ryser's formula over GF(2): signs vanish and each row sum
/// reduces to a parity bit. Throws BudgetExceeded for n > 30.
int permanent_parity(const DenseBitMatrix& m);

/// Entry (i, j) is s_ij(r) mod 2, the parity of the number of pseudopaths of
/// length r from a_i to b_j.
class PseudopathParityMatrix {
public:
  PseudopathParityMatrix(std::uint64_t length, DenseBitMatrix entries)
      : length_(length), entries_(std::move(entries)) {}

  [[nodiscard]] std::uint64_t length() const { return length_; }
  [[nodiscard]] const DenseBitMatrix& entries() const { return entries_; }
  [[nodiscard]] bool parity(std::size_t i, std::size_t j) const { return entries_.get(i, j); }
  /// s_ij(r) mod 2 == delta_ij for all i, j.
  [[nodiscard]] bool is_kronecker_delta() const { return entries_.is_identity(); }

private:
  std::uint64_t length_;
  DenseBitMatrix entries_;
};

/// GF(2) power M^r of the dense biadjacency matrix.
PseudopathParityMatrix pseudopath_parity(const BipartiteCirculantGraph& g, std::uint64_t r);

/// Common degree of every vertex (weight of the first column).
std::size_t degree(const BipartiteCirculantGraph& g);

bool is_complete_bipartite(const BipartiteCirculantGraph& g);

/// Number of circulant (p, p) graphs with an odd number of perfect matchings,
/// each decided by permanent parity. Throws BudgetExceeded when p > max_p.
std::uint64_t count_odd_matching_graphs(std::size_t p,
                                        std::size_t max_p = galgebra::kDefaultEnumerationMaxP);

}  // namespace mersenne::bigraph
