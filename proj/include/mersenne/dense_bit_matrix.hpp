#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mersenne::circulant {

/// Square matrix over GF(2), row-major, each row packed 64 entries per word.
class DenseBitMatrix {
public:
  using Word = std::uint64_t;

  explicit DenseBitMatrix(std::size_t n);

  static DenseBitMatrix identity(std::size_t n);
  static DenseBitMatrix all_ones(std::size_t n);
  /// Rows given as strings of '0'/'1', entry j of row i at rows[i][j].
  static DenseBitMatrix from_rows(const std::vector<std::string>& rows);

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] bool get(std::size_t i, std::size_t j) const {
    return (data_[i * stride_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool value);
  [[nodiscard]] std::span<const Word> row(std::size_t i) const {
    return {data_.data() + i * stride_, stride_};
  }
  [[nodiscard]] std::size_t row_weight(std::size_t i) const;

  /// Product over GF(2). Throws std::invalid_argument on size mismatch.
  friend DenseBitMatrix operator*(const DenseBitMatrix& a, const DenseBitMatrix& b);
  friend bool operator==(const DenseBitMatrix&, const DenseBitMatrix&) = default;

  [[nodiscard]] bool is_identity() const;

  /// Rank by Gaussian elimination over GF(2).
  [[nodiscard]] std::size_t rank() const;

  [[nodiscard]] std::vector<std::string> to_rows() const;

private:
  std::size_t n_;
  std::size_t stride_;
  std::vector<Word> data_;
};

DenseBitMatrix matrix_power(const DenseBitMatrix& a, std::uint64_t e);

/// Determinant over GF(2) by elimination with row swaps.
int det_gf2(const DenseBitMatrix& a);

}  // namespace mersenne::circulant
