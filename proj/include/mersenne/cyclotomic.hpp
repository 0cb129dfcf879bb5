#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mersenne/polynomial.hpp"

namespace mersenne::cyclotomic {

/// Largest p factored unless the caller raises the budget.
inline constexpr std::uint64_t kDefaultMaxP = 521;

/// Irreducible factors of x^p + 1 over GF(2), canonical order (degree, then
/// coefficient pattern). Always contains x + 1 first.
struct Factorization {
  std::uint64_t p = 0;
  std::vector<BinaryPolynomial> factors;

  /// Degrees of the factors in stored order, e.g. {1, 3, 3} for p = 7.
  [[nodiscard]] std::vector<long> degrees() const;
};

/// 1 + x + ... + x^(p-1).
BinaryPolynomial cyclotomic_poly(std::uint64_t p);

/// Complete factorization of x^p + 1 = (x + 1) * Phi_p(x). Splitting uses the
/// characteristic-2 trace map with random probes drawn from a generator seeded
/// by `seed`; the returned list is independent of the seed. Throws
/// BudgetExceeded when p > max_p, std::invalid_argument when p is not an odd
/// prime.
Factorization factor_x_p_minus_1(std::uint64_t p, std::uint64_t seed = 0,
                                 std::uint64_t max_p = kDefaultMaxP);

/// Split a squarefree polynomial whose irreducible factors all have degree
/// `d` into those factors (canonically sorted).
std::vector<BinaryPolynomial> equal_degree_split(const BinaryPolynomial& f, long d,
                                                 std::uint64_t seed = 0);

/// Product reconstructs x^p + 1; x + 1 present; all other factors pairwise
/// distinct, irreducible, of degree ord_p(2), and (p-1)/ord_p(2) of them.
bool verify_factor_profile(const Factorization& f);

}  // namespace mersenne::cyclotomic
