#include "mersenne/group_algebra.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "mersenne/errors.hpp"
#include "mersenne/numtheory.hpp"

namespace mersenne::galgebra {

namespace {

std::size_t word_count(std::size_t p) { return (p + 63) / 64; }

void require_same_modulus(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.modulus() != b.modulus()) throw ModulusMismatch(a.modulus(), b.modulus());
}

BinaryPolynomial x_p_plus_one(std::size_t p) { return BinaryPolynomial::x_n_plus_one(p); }

}  // namespace

GroupAlgebraElement::GroupAlgebraElement(std::size_t p) : p_(p), words_(word_count(p), 0) {
  if (p == 0) throw std::invalid_argument("group algebra modulus must be positive");
}

GroupAlgebraElement GroupAlgebraElement::x_power(std::size_t p, std::size_t k) {
  GroupAlgebraElement out(p);
  out.set_coeff(k % p, true);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::norm(std::size_t p) {
  GroupAlgebraElement out(p);
  for (std::size_t i = 0; i < p; ++i) out.set_coeff(i, true);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::from_exponents(std::size_t p,
                                                        std::initializer_list<std::size_t> exponents) {
  GroupAlgebraElement out(p);
  for (auto k : exponents) out.set_coeff(k % p, !out.coeff(k % p));
  return out;
}

GroupAlgebraElement GroupAlgebraElement::from_bitstring(std::string_view bits, std::size_t p) {
  if (bits.size() > p) {
    throw std::invalid_argument("bitstring has " + std::to_string(bits.size()) +
                                " coefficients, more than p=" + std::to_string(p));
  }
  GroupAlgebraElement out(p);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      out.set_coeff(i, true);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bitstring may only contain '0' and '1'");
    }
  }
  return out;
}

GroupAlgebraElement GroupAlgebraElement::from_mask(std::uint64_t mask, std::size_t p) {
  if (p > 64) throw std::invalid_argument("from_mask requires p <= 64");
  GroupAlgebraElement out(p);
  out.words_[0] = p == 64 ? mask : (mask & ((std::uint64_t{1} << p) - 1));
  return out;
}

GroupAlgebraElement GroupAlgebraElement::from_polynomial(const BinaryPolynomial& f, std::size_t p) {
  // x^i -> x^(i mod p): fold p-bit blocks onto the first.
  GroupAlgebraElement out(p);
  const auto src = f.words();
  const std::size_t nbits = src.size() * 64;
  if (p % 64 == 0) {
    for (std::size_t i = 0; i < src.size(); ++i) out.words_[i % out.words_.size()] ^= src[i];
    return out;
  }
  for (std::size_t base = 0; base < nbits; base += p) {
    // XOR bits [base, base + p) of src into out.
    for (std::size_t w = 0; w < out.words_.size(); ++w) {
      const std::size_t bit = base + w * 64;
      if (bit >= nbits) break;
      const std::size_t sw = bit / 64, sb = bit % 64;
      std::uint64_t chunk = src[sw] >> sb;
      if (sb && sw + 1 < src.size()) chunk |= src[sw + 1] << (64 - sb);
      out.words_[w] ^= chunk;
    }
    // Clear anything that spilled past p in the top word.
    out.words_.back() &= (std::uint64_t{1} << (p % 64)) - 1;
  }
  return out;
}

void GroupAlgebraElement::set_coeff(std::size_t i, bool value) {
  if (i >= p_) throw std::out_of_range("coefficient index past p");
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  words_[i / 64] = value ? (words_[i / 64] | mask) : (words_[i / 64] & ~mask);
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& rhs) {
  require_same_modulus(*this, rhs);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= rhs.words_[i];
  return *this;
}

std::size_t GroupAlgebraElement::weight() const {
  std::size_t n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

bool GroupAlgebraElement::is_zero() const {
  for (auto w : words_) {
    if (w) return false;
  }
  return true;
}

bool GroupAlgebraElement::is_one() const {
  if (words_[0] != 1) return false;
  for (std::size_t i = 1; i < words_.size(); ++i) {
    if (words_[i]) return false;
  }
  return true;
}

BinaryPolynomial GroupAlgebraElement::to_polynomial() const {
  return BinaryPolynomial::from_words(words_);
}

std::string GroupAlgebraElement::to_bitstring() const {
  return to_polynomial().to_bitstring(p_);
}

std::string GroupAlgebraElement::to_hex() const { return to_polynomial().to_hex(); }

GroupAlgebraElement add(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  require_same_modulus(a, b);
  GroupAlgebraElement out = a;
  out += b;
  return out;
}

GroupAlgebraElement mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  require_same_modulus(a, b);
  return GroupAlgebraElement::from_polynomial(a.to_polynomial() * b.to_polynomial(),
                                              a.modulus());
}

GroupAlgebraElement square(const GroupAlgebraElement& a) {
  return GroupAlgebraElement::from_polynomial(a.to_polynomial().square(), a.modulus());
}

GroupAlgebraElement pow(const GroupAlgebraElement& a, std::uint64_t e) {
  GroupAlgebraElement result = GroupAlgebraElement::one(a.modulus());
  GroupAlgebraElement base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = square(base);
  }
  return result;
}

int augmentation(const GroupAlgebraElement& a) { return static_cast<int>(a.weight() & 1u); }

bool is_unit(const GroupAlgebraElement& a) {
  if (a.is_zero()) return false;
  return gcd(x_p_plus_one(a.modulus()), a.to_polynomial()).is_one();
}

GroupAlgebraElement inverse(const GroupAlgebraElement& a) {
  if (a.is_zero()) throw NotInvertible("zero has no inverse");
  const std::size_t p = a.modulus();
  const auto eg = extended_gcd(a.to_polynomial(), x_p_plus_one(p));
  if (!eg.g.is_one()) {
    throw NotInvertible("element " + a.to_bitstring() + " is not a unit in F2[C_" +
                        std::to_string(p) + "]");
  }
  return GroupAlgebraElement::from_polynomial(eg.s, p);
}

std::optional<GroupAlgebraElement> zero_divisor_witness(const GroupAlgebraElement& a) {
  const std::size_t p = a.modulus();
  if (a.is_zero()) return GroupAlgebraElement::one(p);
  const auto modulus = x_p_plus_one(p);
  const auto g = gcd(modulus, a.to_polynomial());
  if (g.is_one()) return std::nullopt;
  // a = g*a', so a * (x^p+1)/g = a' * (x^p+1) == 0; (x^p+1)/g has degree < p.
  return GroupAlgebraElement::from_polynomial(modulus / g, p);
}

bool has_order_exactly_p(const GroupAlgebraElement& a) {
  return !a.is_one() && pow(a, a.modulus()).is_one();
}

BigInt unit_count(std::uint64_t p) {
  const std::uint64_t ord = numtheory::mult_order(2, p);
  BigInt field_units = (BigInt{1} << ord) - 1;
  return boost::multiprecision::pow(field_units, static_cast<unsigned>((p - 1) / ord));
}

BigInt order_p_unit_count(std::uint64_t p) {
  const std::uint64_t ord = numtheory::mult_order(2, p);
  return boost::multiprecision::pow(BigInt{p}, static_cast<unsigned>((p - 1) / ord)) - 1;
}

void check_enumeration_budget(std::size_t p, std::size_t max_p, const char* what) {
  if (p > max_p || p > 62) {
    throw BudgetExceeded(std::string(what) + ": p=" + std::to_string(p) +
                         " exceeds the enumeration budget p <= " + std::to_string(max_p));
  }
}

std::vector<GroupAlgebraElement> enumerate_units(std::uint64_t p, std::size_t max_p) {
  std::vector<GroupAlgebraElement> units;
  for_each_element(p, max_p, [&](const GroupAlgebraElement& a) {
    if (is_unit(a)) units.push_back(a);
  });
  return units;
}

}  // namespace mersenne::galgebra
