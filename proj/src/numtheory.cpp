#include "mersenne/numtheory.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace mersenne::numtheory {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  static constexpr std::array<std::uint64_t, 12> kBases{2,  3,  5,  7,  11, 13,
                                                        17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (auto b : kBases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f <= n / f; f += (f == 2 ? 1 : 2)) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t mult_order(std::uint64_t a, std::uint64_t p) {
  if (p < 3 || !is_prime(p)) {
    throw std::invalid_argument("mult_order: modulus must be an odd prime, got " +
                                std::to_string(p));
  }
  if (a % p == 0) {
    throw std::invalid_argument("mult_order: base is divisible by the modulus");
  }
  for (auto t : divisors(p - 1)) {
    if (pow_mod(a, t, p) == 1) return t;
  }
  // Fermat guarantees t = p - 1 is reached above.
  throw std::logic_error("mult_order: no divisor of p-1 annihilates the base");
}

bool is_power_of_two(std::uint64_t n) { return std::has_single_bit(n); }

bool is_mersenne_prime(std::uint64_t p) {
  return p != UINT64_MAX && is_power_of_two(p + 1) && is_prime(p);
}

bool is_two_rooted(std::uint64_t p) {
  if (p == 2) throw std::invalid_argument("is_two_rooted: p must be odd");
  return mult_order(2, p) == p - 1;
}

int binom_parity(std::uint64_t m, std::uint64_t n) {
  return (n & m) == n ? 1 : 0;
}

int binom_parity_digits(std::uint64_t m, std::uint64_t n) {
  if (n > m) return 0;
  int product = 1;
  while (m || n) {
    const unsigned mi = m & 1, ni = n & 1;
    // C(0,0) = C(1,0) = C(1,1) = 1, C(0,1) = 0.
    const int digit = (mi == 0 && ni == 1) ? 0 : 1;
    product *= digit;
    m >>= 1;
    n >>= 1;
  }
  return product;
}

std::vector<std::uint8_t> binomial_parity_row(std::uint64_t p) {
  std::vector<std::uint8_t> row(p + 1);
  for (std::uint64_t r = 0; r <= p; ++r) {
    row[r] = static_cast<std::uint8_t>(binom_parity(p, r));
  }
  return row;
}

bool row_all_odd(std::uint64_t p) {
  for (std::uint64_t r = 0; r <= p; ++r) {
    if (!binom_parity(p, r)) return false;
  }
  return true;
}

bool power_of_two_binoms_odd(std::uint64_t p) {
  for (std::uint64_t pw = 1; pw <= p; pw <<= 1) {
    if (!binom_parity(p, pw)) return false;
    if (pw > (UINT64_MAX >> 1)) break;
  }
  return true;
}

bool triple_symmetry(std::uint64_t p) {
  if (p <= 3) throw std::invalid_argument("triple_symmetry: requires p > 3");
  for (std::uint64_t r = 1; r < p; ++r) {
    const std::uint64_t r3 = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(r) * 3 % p);
    if (binom_parity(p, r) != binom_parity(p, r3)) return false;
  }
  return true;
}

int mod8_residue(std::uint64_t p) { return static_cast<int>(p % 8); }

std::vector<std::uint32_t> josephus_permutation(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) {
    throw std::invalid_argument("josephus_permutation: p must be odd and >= 3");
  }
  const std::size_t m = (p - 1) / 2;
  // sigma_k = sigma_{k-1} o (1,...,k); in one-line form composing on the right
  // with the k-cycle rotates the first k entries left by one.
  std::vector<std::uint32_t> sigma(m);
  for (std::size_t i = 0; i < m; ++i) sigma[i] = static_cast<std::uint32_t>(i);
  for (std::size_t k = 2; k <= m; ++k) {
    std::rotate(sigma.begin(), sigma.begin() + 1, sigma.begin() + k);
  }
  return sigma;
}

bool josephus_transitive(std::uint64_t p) {
  const auto sigma = josephus_permutation(p);
  const std::size_t m = sigma.size();
  std::size_t len = 0;
  std::uint32_t x = 0;
  do {
    x = sigma[x];
    ++len;
  } while (x != 0 && len <= m);
  return len == m;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || lo > hi) return out;
  lo = std::max<std::uint64_t>(lo, 2);
  if (hi <= 50'000'000) {
    std::vector<bool> composite(hi + 1, false);
    for (std::uint64_t i = 2; i * i <= hi; ++i) {
      if (!composite[i]) {
        for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
      }
    }
    for (std::uint64_t n = lo; n <= hi; ++n) {
      if (!composite[n]) out.push_back(n);
    }
    return out;
  }
  for (std::uint64_t n = lo;; ++n) {
    if (is_prime(n)) out.push_back(n);
    if (n == hi) break;
  }
  return out;
}

}  // namespace mersenne::numtheory
