#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mersenne/dense_bit_matrix.hpp"
#include "mersenne/group_algebra.hpp"

namespace mersenne::circulant {

/// p x p circulant over GF(2), stored as its first column only. Column j is
/// the first column rotated down by j, so entry (i, j) is column[(i - j) mod p].
class CirculantMatrix {
public:
  explicit CirculantMatrix(galgebra::GroupAlgebraElement first_column)
      : column_(std::move(first_column)) {}

  static CirculantMatrix identity(std::size_t p) {
    return CirculantMatrix(galgebra::GroupAlgebraElement::one(p));
  }
  /// J, the all-ones matrix.
  static CirculantMatrix all_ones(std::size_t p) {
    return CirculantMatrix(galgebra::GroupAlgebraElement::norm(p));
  }
  /// circ(v_0, v_1, ...) from a little-endian bitstring, zero padded to p.
  static CirculantMatrix from_column(std::string_view bits, std::size_t p) {
    return CirculantMatrix(galgebra::GroupAlgebraElement::from_bitstring(bits, p));
  }

  [[nodiscard]] std::size_t size() const { return column_.modulus(); }
  [[nodiscard]] const galgebra::GroupAlgebraElement& first_column() const { return column_; }
  [[nodiscard]] bool entry(std::size_t i, std::size_t j) const {
    const std::size_t p = size();
    return column_.coeff((i + p - j % p) % p);
  }
  [[nodiscard]] DenseBitMatrix to_dense() const;
  /// Shared encoding with the group algebra element: first column bitstring.
  [[nodiscard]] std::string to_bitstring() const { return column_.to_bitstring(); }

  friend bool operator==(const CirculantMatrix&, const CirculantMatrix&) = default;

private:
  galgebra::GroupAlgebraElement column_;
};

/// The ring isomorphism F2[C_p] -> circulants: sum a_i x^i -> circ(a_0, ..., a_{p-1}).
inline CirculantMatrix rho(const galgebra::GroupAlgebraElement& a) { return CirculantMatrix(a); }
inline galgebra::GroupAlgebraElement rho_inv(const CirculantMatrix& m) { return m.first_column(); }

CirculantMatrix matadd(const CirculantMatrix& a, const CirculantMatrix& b);
/// Product through the first-column convolution. Throws ModulusMismatch.
CirculantMatrix matmul(const CirculantMatrix& a, const CirculantMatrix& b);
CirculantMatrix matpow(const CirculantMatrix& a, std::uint64_t e);

/// Elimination on the dense materialization; never routed through the algebra.
int det_gf2(const CirculantMatrix& a);

/// A * (1, ..., 1)^T == 0, computed on the dense materialization.
bool nullspace_contains_all_ones(const CirculantMatrix& a);

/// Exactly one nonzero entry per column.
bool is_permutation_circulant(const CirculantMatrix& a);

/// A^p == I (order divides p).
bool has_order_dividing_p(const CirculantMatrix& a);

struct InvertibleCirculants {
  std::uint64_t count = 0;
  std::vector<CirculantMatrix> matrices;  ///< filled only when requested
};

/// Scans all 2^p first columns and counts det_gf2 == 1. Throws BudgetExceeded
/// when p > max_p.
InvertibleCirculants enumerate_invertible_circulants(
    std::size_t p, std::size_t max_p = galgebra::kDefaultEnumerationMaxP, bool keep_list = false);

}  // namespace mersenne::circulant
