#include "mersenne/bigraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "mersenne/errors.hpp"

namespace mersenne::bigraph {

namespace {

void require_at_most(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw BudgetExceeded(std::string(what) + ": n=" + std::to_string(n) +
                         " exceeds the limit n <= " + std::to_string(limit));
  }
}

BigInt from_int128(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  BigInt out = static_cast<std::uint64_t>(u >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(u);
  return negative ? BigInt(-out) : out;
}

}  // namespace

std::vector<std::vector<std::size_t>> adjacency_list(const BipartiteCirculantGraph& g) {
  std::vector<std::vector<std::size_t>> out(g.side());
  for (std::size_t i = 0; i < g.side(); ++i) {
    for (std::size_t j = 0; j < g.side(); ++j) {
      if (g.has_edge(i, j)) out[i].push_back(j);
    }
  }
  return out;
}

int matching_parity(const BipartiteCirculantGraph& g) { return circulant::det_gf2(g.biadjacency()); }

BigInt permanent_ryser(const DenseBitMatrix& m) {
  const std::size_t n = m.size();
  require_at_most(n, kRyserMaxN, "permanent_ryser");
  if (n == 0) return 1;
  // Row sums are <= 20 and products <= 20^20 < 2^127, so 128-bit accumulation
  // over 2^20 subsets cannot overflow.
  std::vector<long> row_sum(n, 0);
  std::vector<bool> in_set(n, false);
  __int128 total = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  int set_size = 0;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const auto j = static_cast<std::size_t>(std::countr_zero(k));
    const long delta = in_set[j] ? -1 : 1;
    in_set[j] = !in_set[j];
    set_size += static_cast<int>(delta);
    for (std::size_t i = 0; i < n; ++i) {
      if (m.get(i, j)) row_sum[i] += delta;
    }
    __int128 product = 1;
    for (std::size_t i = 0; i < n && product != 0; ++i) product *= row_sum[i];
    total += (set_size & 1) ? -product : product;
  }
  if (n & 1) total = -total;
  return from_int128(total);
}

BigInt permanent_permutation_sum(const DenseBitMatrix& m) {
  const std::size_t n = m.size();
  require_at_most(n, kPermutationSumMaxN, "permanent_permutation_sum");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::uint64_t count = 0;
  do {
    bool all = true;
    for (std::size_t i = 0; i < n && all; ++i) all = m.get(i, perm[i]);
    count += all ? 1 : 0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

BigInt exact_permanent(const DenseBitMatrix& m) { return permanent_ryser(m); }

int permanent_parity(const DenseBitMatrix& m) {
  const std::size_t n = m.size();
  require_at_most(n, kPermanentParityMaxN, "permanent_parity");
  if (n == 0) return 1;
  // column_rows[j]: bitmask of rows i with m(i, j) = 1.
  std::vector<std::uint32_t> column_rows(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m.get(i, j)) column_rows[j] |= std::uint32_t{1} << i;
    }
  }
  const std::uint32_t full = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  std::uint32_t row_parity = 0;
  unsigned odd_terms = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    row_parity ^= column_rows[static_cast<std::size_t>(std::countr_zero(k))];
    odd_terms ^= row_parity == full ? 1u : 0u;
  }
  return static_cast<int>(odd_terms);
}

PseudopathParityMatrix pseudopath_parity(const BipartiteCirculantGraph& g, std::uint64_t r) {
  return PseudopathParityMatrix(r, circulant::matrix_power(g.biadjacency().to_dense(), r));
}

std::size_t degree(const BipartiteCirculantGraph& g) { return g.biadjacency().first_column().weight(); }

bool is_complete_bipartite(const BipartiteCirculantGraph& g) { return degree(g) == g.side(); }

std::uint64_t count_odd_matching_graphs(std::size_t p, std::size_t max_p) {
  std::uint64_t count = 0;
  galgebra::for_each_element(p, max_p, [&](const galgebra::GroupAlgebraElement& column) {
    BipartiteCirculantGraph g{CirculantMatrix(column)};
    count += static_cast<std::uint64_t>(permanent_parity(g.biadjacency().to_dense()));
  });
  return count;
}

}  // namespace mersenne::bigraph
