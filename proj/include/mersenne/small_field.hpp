#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace mersenne::delta {

/// Finite field F_q for a prime power q <= 256.
///
/// Elements are the integers 0..q-1. For q = r^k the integer's base-r digits
/// are the coefficients (lowest first) of a polynomial of degree < k, reduced
/// modulo the smallest monic irreducible of degree k over F_r, where
/// "smallest" orders candidates by the integer value of their coefficient
/// list. This gives x^2+x+1 for F_4 and x^3+x+1 for F_8. Arithmetic runs off
/// full q x q tables; log/antilog tables relative to the smallest primitive
/// element back inverses and powers.
class SmallField {
public:
  /// Shared, lazily built instance. Throws std::invalid_argument unless q is
  /// a prime power in [2, 256].
  static const SmallField& get(unsigned q);

  [[nodiscard]] unsigned size() const { return q_; }
  [[nodiscard]] unsigned characteristic() const { return r_; }
  [[nodiscard]] unsigned degree() const { return k_; }
  /// Coefficients of the monic reduction polynomial, lowest first (k + 1
  /// entries). Empty for prime fields.
  [[nodiscard]] const std::vector<unsigned>& modulus() const { return modulus_; }
  [[nodiscard]] unsigned generator() const { return generator_; }

  [[nodiscard]] std::uint8_t add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  [[nodiscard]] std::uint8_t mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  [[nodiscard]] std::uint8_t neg(unsigned a) const { return neg_[a]; }
  /// Throws std::domain_error for 0.
  [[nodiscard]] std::uint8_t inv(unsigned a) const;
  [[nodiscard]] std::uint8_t pow(unsigned a, std::uint64_t e) const;

  /// Commutativity, associativity, distributivity, identities and inverses,
  /// checked exhaustively. Run once when the instance is built.
  [[nodiscard]] bool verify_axioms() const;

  explicit SmallField(unsigned q);

private:
  unsigned q_, r_, k_;
  unsigned generator_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<std::uint8_t> add_, mul_, neg_;
  std::vector<std::uint8_t> log_, exp_;
};

/// (r, k) with q = r^k for prime r, or (0, 0) if q is not a prime power.
std::pair<unsigned, unsigned> prime_power_decompose(unsigned q);

}  // namespace mersenne::delta
