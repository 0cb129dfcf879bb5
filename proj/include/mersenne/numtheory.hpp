#pragma once

#include <cstdint>
#include <vector>

namespace mersenne::numtheory {

/// Deterministic for every 64-bit input (strong probable-prime test over the
/// first twelve prime bases).
bool is_prime(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Distinct prime factors of n, ascending. Trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// All positive divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Least t >= 1 with a^t == 1 (mod p). Throws std::invalid_argument when
/// a == 0 (mod p) or p is not an odd prime.
std::uint64_t mult_order(std::uint64_t a, std::uint64_t p);

bool is_power_of_two(std::uint64_t n);

/// p + 1 is a power of two.
bool is_mersenne_prime(std::uint64_t p);

/// 2 is a primitive root mod p. Throws for p == 2.
bool is_two_rooted(std::uint64_t p);

/// C(m, n) mod 2 by digit domination: n & m == n.
int binom_parity(std::uint64_t m, std::uint64_t n);

/// C(m, n) mod 2 as the product of base-2 digit binomials C(m_i, n_i).
/// Second, independent route for the same quantity.
int binom_parity_digits(std::uint64_t m, std::uint64_t n);

/// Row p of Pascal's triangle mod 2; index r holds C(p, r) mod 2.
std::vector<std::uint8_t> binomial_parity_row(std::uint64_t p);

/// Every C(p, r), 0 <= r <= p, is odd.
bool row_all_odd(std::uint64_t p);

/// Every C(p, 2^m) with 2^m <= p is odd.
bool power_of_two_binoms_odd(std::uint64_t p);

/// C(p, r) == C(p, 3r mod p) (mod 2) for 1 <= r <= p-1. Requires p > 3.
bool triple_symmetry(std::uint64_t p);

int mod8_residue(std::uint64_t p);

/// Product (1,2)(1,2,3)...(1,2,...,m) with p = 2m+1, composed right to left
/// (the rightmost cycle acts first). Returned in one-line notation over
/// 0-based points: result[i] is the image of point i+1, minus one.
std::vector<std::uint32_t> josephus_permutation(std::uint64_t p);

/// The Josephus product above is a single m-cycle.
bool josephus_transitive(std::uint64_t p);

/// Primes in [lo, hi], ascending.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

}  // namespace mersenne::numtheory
