#include "mersenne/small_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace mersenne::delta {

std::pair<unsigned, unsigned> prime_power_decompose(unsigned q) {
  if (q < 2) return {0, 0};
  unsigned r = 2;
  while (q % r != 0) ++r;
  unsigned k = 0;
  while (q % r == 0) {
    q /= r;
    ++k;
  }
  return q == 1 ? std::pair{r, k} : std::pair{0u, 0u};
}

namespace {

std::vector<unsigned> to_digits(unsigned v, unsigned r, unsigned k) {
  std::vector<unsigned> d(k);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = v % r;
    v /= r;
  }
  return d;
}

unsigned from_digits(const std::vector<unsigned>& d, unsigned r) {
  unsigned v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * r + d[i];
  return v;
}

// Product of two digit vectors modulo a monic polynomial of degree k.
unsigned poly_mulmod(unsigned a, unsigned b, const std::vector<unsigned>& modulus, unsigned r,
                     unsigned k) {
  const auto da = to_digits(a, r, k), db = to_digits(b, r, k);
  std::vector<unsigned> prod(2 * k - 1, 0);
  for (unsigned i = 0; i < k; ++i) {
    for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % r;
  }
  for (unsigned deg = 2 * k - 2; deg >= k; --deg) {
    const unsigned t = prod[deg];
    if (t) {
      for (unsigned i = 0; i < k; ++i) {
        const unsigned sub = t * modulus[i] % r;
        prod[deg - k + i] = (prod[deg - k + i] + r - sub) % r;
      }
      prod[deg] = 0;
    }
  }
  prod.resize(k);
  return from_digits(prod, r);
}

}  // namespace

SmallField::SmallField(unsigned q) : q_(q) {
  const auto [r, k] = prime_power_decompose(q);
  if (r == 0 || q > 256) {
    throw std::invalid_argument("SmallField: q must be a prime power in [2, 256], got " +
                                std::to_string(q));
  }
  r_ = r;
  k_ = k;
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  for (unsigned a = 0; a < q; ++a) {
    const auto da = to_digits(a, r, k);
    std::vector<unsigned> dn(k);
    for (unsigned i = 0; i < k; ++i) dn[i] = (r - da[i]) % r;
    neg_[a] = static_cast<std::uint8_t>(from_digits(dn, r));
    for (unsigned b = 0; b < q; ++b) {
      const auto db = to_digits(b, r, k);
      std::vector<unsigned> ds(k);
      for (unsigned i = 0; i < k; ++i) ds[i] = (da[i] + db[i]) % r;
      add_[a * q + b] = static_cast<std::uint8_t>(from_digits(ds, r));
    }
  }

  if (k == 1) {
    for (unsigned a = 0; a < q; ++a) {
      for (unsigned b = 0; b < q; ++b) mul_[a * q + b] = static_cast<std::uint8_t>(a * b % q);
    }
  } else {
    // First monic candidate of degree k whose quotient ring has no zero divisors.
    bool found = false;
    for (unsigned c = 0; c < q && !found; ++c) {
      auto modulus = to_digits(c, r, k);
      modulus.push_back(1);
      bool field = true;
      for (unsigned a = 1; a < q && field; ++a) {
        for (unsigned b = 1; b < q; ++b) {
          const unsigned v = poly_mulmod(a, b, modulus, r, k);
          if (v == 0) {
            field = false;
            break;
          }
          mul_[a * q + b] = static_cast<std::uint8_t>(v);
        }
      }
      if (field) {
        modulus_ = std::move(modulus);
        found = true;
      }
    }
    if (!found) throw std::logic_error("SmallField: no irreducible modulus found");
    for (unsigned a = 0; a < q; ++a) {
      mul_[a] = 0;
      mul_[a * q] = 0;
    }
  }

  // Smallest element of multiplicative order q - 1.
  log_.assign(q, 0);
  exp_.assign(q - 1, 0);
  for (unsigned g = 1; g < q; ++g) {
    unsigned x = 1, order = 0;
    do {
      x = mul(x, g);
      ++order;
    } while (x != 1);
    if (order == q - 1) {
      generator_ = g;
      break;
    }
  }
  unsigned x = 1;
  for (unsigned i = 0; i + 1 < q; ++i) {
    exp_[i] = static_cast<std::uint8_t>(x);
    log_[x] = static_cast<std::uint8_t>(i);
    x = mul(x, generator_);
  }
}

std::uint8_t SmallField::inv(unsigned a) const {
  if (a == 0) throw std::domain_error("SmallField: zero has no inverse");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint8_t SmallField::pow(unsigned a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = q_ - 1;
  return exp_[(log_[a] * (e % order)) % order];
}

bool SmallField::verify_axioms() const {
  for (unsigned a = 0; a < q_; ++a) {
    if (add(a, 0) != a || mul(a, 1) != a || add(a, neg(a)) != 0) return false;
    if (a != 0 && mul(a, inv(a)) != 1) return false;
    for (unsigned b = 0; b < q_; ++b) {
      if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) return false;
      for (unsigned c = 0; c < q_; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
        if (add(add(a, b), c) != add(a, add(b, c))) return false;
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) return false;
      }
    }
  }
  return true;
}

const SmallField& SmallField::get(unsigned q) {
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<SmallField>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(q);
  if (it == cache.end()) {
    auto field = std::make_unique<SmallField>(q);
    if (!field->verify_axioms()) {
      throw std::logic_error("SmallField: axiom check failed for q=" + std::to_string(q));
    }
    it = cache.emplace(q, std::move(field)).first;
  }
  return *it->second;
}

}  // namespace mersenne::delta
