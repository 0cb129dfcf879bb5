#include "mersenne/cyclotomic.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "mersenne/errors.hpp"
#include "mersenne/numtheory.hpp"

namespace mersenne::cyclotomic {

std::vector<long> Factorization::degrees() const {
  std::vector<long> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(f.degree());
  return out;
}

BinaryPolynomial cyclotomic_poly(std::uint64_t p) {
  return BinaryPolynomial::all_ones(p);
}

namespace {

BinaryPolynomial random_below(std::mt19937_64& rng, long degree_bound) {
  const auto n = static_cast<std::size_t>(degree_bound);
  std::vector<BinaryPolynomial::Word> words((n + 63) / 64);
  for (auto& w : words) w = rng();
  if (n % 64) words.back() &= (BinaryPolynomial::Word{1} << (n % 64)) - 1;
  return BinaryPolynomial::from_words(std::move(words));
}

// Tr(r) = r + r^2 + ... + r^(2^(d-1)) mod f.
BinaryPolynomial trace(const BinaryPolynomial& r, long d, const BinaryPolynomial& f) {
  BinaryPolynomial term = r % f;
  BinaryPolynomial sum = term;
  for (long i = 1; i < d; ++i) {
    term = sqrmod(term, f);
    sum += term;
  }
  return sum;
}

void split_into(const BinaryPolynomial& f, long d, std::mt19937_64& rng,
                std::vector<BinaryPolynomial>& out) {
  const long n = f.degree();
  if (n <= d) {
    out.push_back(f);
    return;
  }
  // Each irreducible factor sees Tr(r) as a uniform element of GF(2), so a
  // proper split appears with probability at least 1/2 per probe.
  for (;;) {
    const auto r = random_below(rng, n);
    if (r.degree() < 1) continue;
    const auto g = gcd(f, trace(r, d, f));
    const long dg = g.degree();
    if (dg > 0 && dg < n) {
      split_into(g, d, rng, out);
      split_into(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<BinaryPolynomial> equal_degree_split(const BinaryPolynomial& f, long d,
                                                 std::uint64_t seed) {
  if (d < 1 || f.degree() < 1 || f.degree() % d != 0) {
    throw std::invalid_argument("equal_degree_split: degree must be a positive multiple of d");
  }
  std::mt19937_64 rng(seed);
  std::vector<BinaryPolynomial> out;
  split_into(f, d, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

Factorization factor_x_p_minus_1(std::uint64_t p, std::uint64_t seed, std::uint64_t max_p) {
  if (p < 3 || !numtheory::is_prime(p)) {
    throw std::invalid_argument("factor_x_p_minus_1: p must be an odd prime, got " +
                                std::to_string(p));
  }
  if (p > max_p) {
    throw BudgetExceeded("factor_x_p_minus_1: p=" + std::to_string(p) +
                         " exceeds the factorization budget p <= " + std::to_string(max_p));
  }
  const auto d = static_cast<long>(numtheory::mult_order(2, p));
  Factorization out;
  out.p = p;
  out.factors.push_back(BinaryPolynomial::from_uint(0b11));
  auto rest = equal_degree_split(cyclotomic_poly(p), d, seed);
  out.factors.insert(out.factors.end(), rest.begin(), rest.end());
  return out;
}

bool verify_factor_profile(const Factorization& f) {
  const std::uint64_t p = f.p;
  if (p < 3 || !numtheory::is_prime(p) || f.factors.empty()) return false;
  const auto d = static_cast<long>(numtheory::mult_order(2, p));
  const auto linear = BinaryPolynomial::from_uint(0b11);

  BinaryPolynomial product = BinaryPolynomial::one();
  std::size_t linear_count = 0, nonlinear_count = 0;
  for (const auto& g : f.factors) {
    product = product * g;
    if (g == linear) {
      ++linear_count;
    } else {
      if (g.degree() != d || !is_irreducible(g)) return false;
      ++nonlinear_count;
    }
  }
  auto sorted = f.factors;
  std::sort(sorted.begin(), sorted.end());
  const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  return linear_count == 1 && distinct &&
         nonlinear_count == (p - 1) / static_cast<std::uint64_t>(d) &&
         product == BinaryPolynomial::x_n_plus_one(p);
}

}  // namespace mersenne::cyclotomic
