#include "mersenne/dense_bit_matrix.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace mersenne::circulant {

DenseBitMatrix::DenseBitMatrix(std::size_t n)
    : n_(n), stride_((n + 63) / 64), data_(n * stride_, 0) {}

DenseBitMatrix DenseBitMatrix::identity(std::size_t n) {
  DenseBitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

DenseBitMatrix DenseBitMatrix::all_ones(std::size_t n) {
  DenseBitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, true);
  }
  return m;
}

DenseBitMatrix DenseBitMatrix::from_rows(const std::vector<std::string>& rows) {
  DenseBitMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, rows[i][j] == '1');
  }
  return m;
}

void DenseBitMatrix::set(std::size_t i, std::size_t j, bool value) {
  Word& w = data_[i * stride_ + j / 64];
  const Word mask = Word{1} << (j % 64);
  w = value ? (w | mask) : (w & ~mask);
}

std::size_t DenseBitMatrix::row_weight(std::size_t i) const {
  std::size_t n = 0;
  for (auto w : row(i)) n += std::popcount(w);
  return n;
}

DenseBitMatrix operator*(const DenseBitMatrix& a, const DenseBitMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("dense matrix size mismatch");
  DenseBitMatrix c(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) {
    DenseBitMatrix::Word* out = c.data_.data() + i * c.stride_;
    for (std::size_t k = 0; k < a.n_; ++k) {
      if (!a.get(i, k)) continue;
      const DenseBitMatrix::Word* src = b.data_.data() + k * b.stride_;
      for (std::size_t w = 0; w < c.stride_; ++w) out[w] ^= src[w];
    }
  }
  return c;
}

bool DenseBitMatrix::is_identity() const { return *this == identity(n_); }

std::size_t DenseBitMatrix::rank() const {
  std::vector<Word> m = data_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n_ && rank < n_; ++col) {
    const std::size_t wi = col / 64;
    const Word mask = Word{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < n_ && !(m[pivot * stride_ + wi] & mask)) ++pivot;
    if (pivot == n_) continue;
    if (pivot != rank) {
      for (std::size_t w = 0; w < stride_; ++w) {
        std::swap(m[pivot * stride_ + w], m[rank * stride_ + w]);
      }
    }
    for (std::size_t r = rank + 1; r < n_; ++r) {
      if (m[r * stride_ + wi] & mask) {
        for (std::size_t w = wi; w < stride_; ++w) m[r * stride_ + w] ^= m[rank * stride_ + w];
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<std::string> DenseBitMatrix::to_rows() const {
  std::vector<std::string> rows(n_, std::string(n_, '0'));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (get(i, j)) rows[i][j] = '1';
    }
  }
  return rows;
}

DenseBitMatrix matrix_power(const DenseBitMatrix& a, std::uint64_t e) {
  DenseBitMatrix result = DenseBitMatrix::identity(a.size());
  DenseBitMatrix base = a;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

int det_gf2(const DenseBitMatrix& a) { return a.rank() == a.size() ? 1 : 0; }

}  // namespace mersenne::circulant
