#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mersenne {

/// Dense polynomial over GF(2), packed 64 coefficients per word with bit i of
/// the packed sequence holding the coefficient of x^i. The word vector never
/// carries trailing zero words, so equality is representation equality.
class BinaryPolynomial {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BinaryPolynomial() = default;

  static BinaryPolynomial zero() { return {}; }
  static BinaryPolynomial one() { return monomial(0); }
  static BinaryPolynomial monomial(std::size_t k);
  /// x^n + 1
  static BinaryPolynomial x_n_plus_one(std::size_t n);
  /// 1 + x + ... + x^(n-1)
  static BinaryPolynomial all_ones(std::size_t n);
  static BinaryPolynomial from_words(std::vector<Word> words);
  /// Low-order word first; convenient for polynomials of degree < 64.
  static BinaryPolynomial from_uint(Word bits) { return from_words({bits}); }
  /// Little-endian bitstring: "1101" is 1 + x + x^3.
  static BinaryPolynomial from_bitstring(std::string_view bits);

  /// -1 for the zero polynomial.
  [[nodiscard]] long degree() const;
  [[nodiscard]] bool is_zero() const { return words_.empty(); }
  [[nodiscard]] bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
  [[nodiscard]] bool coeff(std::size_t i) const {
    const std::size_t w = i / kWordBits;
    return w < words_.size() && ((words_[w] >> (i % kWordBits)) & 1u);
  }
  void set_coeff(std::size_t i, bool value);
  [[nodiscard]] std::size_t weight() const;
  [[nodiscard]] std::span<const Word> words() const { return words_; }
  /// Low 64 coefficients as an integer (exact when degree < 64).
  [[nodiscard]] Word low_word() const { return words_.empty() ? 0 : words_[0]; }

  BinaryPolynomial& operator+=(const BinaryPolynomial& rhs);
  friend BinaryPolynomial operator+(BinaryPolynomial lhs, const BinaryPolynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b);

  /// this ^= other * x^shift
  void add_shifted(const BinaryPolynomial& other, std::size_t shift);

  [[nodiscard]] BinaryPolynomial square() const;
  [[nodiscard]] BinaryPolynomial derivative() const;
  [[nodiscard]] BinaryPolynomial shifted(std::size_t k) const;

  /// Little-endian bitstring of exactly `length` coefficients (default:
  /// degree + 1, or "0" for zero).
  [[nodiscard]] std::string to_bitstring(std::size_t length = 0) const;
  /// Hex of the integer sum c_i 2^i, most significant nibble first, "0x" prefix.
  [[nodiscard]] std::string to_hex() const;

  friend bool operator==(const BinaryPolynomial&, const BinaryPolynomial&) = default;
  /// Canonical order: by degree, then by coefficient pattern read as an integer.
  friend std::strong_ordering operator<=>(const BinaryPolynomial& a, const BinaryPolynomial& b);

private:
  void trim();
  std::vector<Word> words_;
};

struct DivMod {
  BinaryPolynomial quotient;
  BinaryPolynomial remainder;
};

/// Throws std::domain_error on division by zero.
DivMod divmod(const BinaryPolynomial& a, const BinaryPolynomial& b);
BinaryPolynomial operator%(const BinaryPolynomial& a, const BinaryPolynomial& b);
BinaryPolynomial operator/(const BinaryPolynomial& a, const BinaryPolynomial& b);

BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b);

struct ExtendedGcd {
  BinaryPolynomial g;  ///< gcd(a, b)
  BinaryPolynomial s;  ///< s*a + t*b == g
  BinaryPolynomial t;
};

ExtendedGcd extended_gcd(const BinaryPolynomial& a, const BinaryPolynomial& b);

BinaryPolynomial mulmod(const BinaryPolynomial& a, const BinaryPolynomial& b,
                        const BinaryPolynomial& f);
BinaryPolynomial sqrmod(const BinaryPolynomial& a, const BinaryPolynomial& f);
BinaryPolynomial powmod(BinaryPolynomial a, std::uint64_t e, const BinaryPolynomial& f);

/// Ben-Or: f has no irreducible factor of degree <= deg(f)/2.
bool is_irreducible(const BinaryPolynomial& f);

}  // namespace mersenne
