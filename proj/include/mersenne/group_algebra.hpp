#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mersenne/bigint.hpp"
#include "mersenne/polynomial.hpp"

namespace mersenne::galgebra {

/// Default ceiling on p for exhaustive scans over all 2^p elements.
inline constexpr std::size_t kDefaultEnumerationMaxP = 13;

/// Element of F2[C_p] = F2[x]/(x^p - 1): exactly p coefficient bits, packed
/// 64 per word, bit i the coefficient of x^i. Bits at and above p are zero.
class GroupAlgebraElement {
public:
  using Word = std::uint64_t;

  /// The zero element of F2[C_p]. p must be >= 1.
  explicit GroupAlgebraElement(std::size_t p);

  static GroupAlgebraElement zero(std::size_t p) { return GroupAlgebraElement(p); }
  static GroupAlgebraElement one(std::size_t p) { return x_power(p, 0); }
  /// x^k, exponent taken mod p.
  static GroupAlgebraElement x_power(std::size_t p, std::size_t k);
  /// The norm element 1 + x + ... + x^(p-1).
  static GroupAlgebraElement norm(std::size_t p);
  /// Sum of x^k for k in `exponents` (each reduced mod p, duplicates cancel).
  static GroupAlgebraElement from_exponents(std::size_t p, std::initializer_list<std::size_t> exponents);
  /// Little-endian bitstring, zero padded to p. Longer strings are rejected.
  static GroupAlgebraElement from_bitstring(std::string_view bits, std::size_t p);
  /// Coefficient pattern given as an integer (bit i = coefficient of x^i); p <= 64.
  static GroupAlgebraElement from_mask(std::uint64_t mask, std::size_t p);
  /// Image of a polynomial under F2[x] -> F2[x]/(x^p - 1).
  static GroupAlgebraElement from_polynomial(const BinaryPolynomial& f, std::size_t p);

  [[nodiscard]] std::size_t modulus() const { return p_; }
  [[nodiscard]] bool coeff(std::size_t i) const {
    return (words_[i / 64] >> (i % 64)) & 1u;
  }
  void set_coeff(std::size_t i, bool value);
  /// Throws ModulusMismatch.
  GroupAlgebraElement& operator+=(const GroupAlgebraElement& rhs);
  [[nodiscard]] std::size_t weight() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_one() const;
  [[nodiscard]] std::span<const Word> words() const { return words_; }
  [[nodiscard]] BinaryPolynomial to_polynomial() const;

  [[nodiscard]] std::string to_bitstring() const;
  [[nodiscard]] std::string to_hex() const;

  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

private:
  std::size_t p_;
  std::vector<Word> words_;
};

/// Coefficientwise XOR. Throws ModulusMismatch.
GroupAlgebraElement add(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
/// Cyclic convolution over GF(2). Throws ModulusMismatch.
GroupAlgebraElement mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement square(const GroupAlgebraElement& a);
/// Square-and-multiply; pow(a, 0) is the identity.
GroupAlgebraElement pow(const GroupAlgebraElement& a, std::uint64_t e);

inline GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return add(a, b);
}
inline GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return mul(a, b);
}

/// Sum of coefficients mod 2.
int augmentation(const GroupAlgebraElement& a);

/// gcd(a(x), x^p + 1) == 1 in F2[x].
bool is_unit(const GroupAlgebraElement& a);

/// Throws NotInvertible for non-units.
GroupAlgebraElement inverse(const GroupAlgebraElement& a);

/// For a non-unit a, some b != 0 with a*b == 0 (from the gcd cofactor);
/// std::nullopt for units.
std::optional<GroupAlgebraElement> zero_divisor_witness(const GroupAlgebraElement& a);

/// a != 1 and a^p == 1.
bool has_order_exactly_p(const GroupAlgebraElement& a);

/// |(F2 C_p)^x| = (2^ord - 1)^((p-1)/ord), ord = ord_p(2).
BigInt unit_count(std::uint64_t p);

/// Number of units of order p: p^((p-1)/ord) - 1.
BigInt order_p_unit_count(std::uint64_t p);

/// Every unit, found by testing all 2^p coefficient patterns. Throws
/// BudgetExceeded when p > max_p.
std::vector<GroupAlgebraElement> enumerate_units(std::uint64_t p,
                                                 std::size_t max_p = kDefaultEnumerationMaxP);

/// Invokes fn(element) for each of the 2^p elements in mask order. Throws
/// BudgetExceeded when p > max_p.
template <typename Fn>
void for_each_element(std::size_t p, std::size_t max_p, Fn&& fn);

void check_enumeration_budget(std::size_t p, std::size_t max_p, const char* what);

template <typename Fn>
void for_each_element(std::size_t p, std::size_t max_p, Fn&& fn) {
  check_enumeration_budget(p, max_p, "for_each_element");
  const std::uint64_t count = std::uint64_t{1} << p;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    fn(GroupAlgebraElement::from_mask(mask, p));
  }
}

}  // namespace mersenne::galgebra
