#include "doctest.h"
#include "mersenne/circulant.hpp"
#include "mersenne/errors.hpp"
#include "oracles.hpp"

using namespace mersenne;
using namespace mersenne::circulant;
using galgebra::GroupAlgebraElement;

namespace {

CirculantMatrix circ(const std::string& bits, std::size_t p) { return CirculantMatrix::from_column(bits, p); }

oracle::Matrix dense_oracle(const CirculantMatrix& a) {
  oracle::Bits col(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) col[i] = a.first_column().coeff(i);
  return oracle::circulant(col);
}

oracle::Matrix to_matrix(const DenseBitMatrix& m) {
  oracle::Matrix out(m.size(), oracle::Bits(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m.get(i, j);
  return out;
}

}  // namespace

TEST_CASE("rho dictionary") {
  CHECK(rho(GroupAlgebraElement::one(7)) == CirculantMatrix::identity(7));
  CHECK(rho(GroupAlgebraElement::from_exponents(7, {0, 1, 2})) == circ("111", 7));
  CHECK(rho(GroupAlgebraElement::norm(7)) == CirculantMatrix::all_ones(7));
  CHECK(rho_inv(circ("1101", 7)) == GroupAlgebraElement::from_exponents(7, {0, 1, 3}));
  CHECK(CirculantMatrix::all_ones(5).to_dense() == DenseBitMatrix::all_ones(5));
  CHECK(CirculantMatrix::identity(70).to_dense().is_identity());
}

TEST_CASE("layout: each column is the previous one rotated down") {
  const auto a = circ("1101", 7);
  const auto d = a.to_dense();
  CHECK(to_matrix(d) == dense_oracle(a));
  for (std::size_t j = 1; j < 7; ++j)
    for (std::size_t i = 0; i < 7; ++i) CHECK(a.entry(i, j) == a.entry((i + 6) % 7, j - 1));
}

TEST_CASE("products and powers") {
  const auto a = circ("1101001", 7);
  CHECK(matmul(a, CirculantMatrix::identity(7)) == a);
  CHECK(matmul(circ("11", 7), circ("111", 7)) == circ("1001", 7));
  CHECK(matmul(CirculantMatrix::all_ones(7), CirculantMatrix::all_ones(7)) == CirculantMatrix::all_ones(7));
  CHECK(matpow(circ("111", 7), 7) == CirculantMatrix::identity(7));
  CHECK_FALSE(matpow(circ("111", 5), 5) == CirculantMatrix::identity(5));
  CHECK(matpow(circ("01", 11), 11) == CirculantMatrix::identity(11));
  CHECK_THROWS_AS(matmul(circ("1", 5), circ("1", 7)), ModulusMismatch);
}

TEST_CASE("determinant and kernel examples") {
  CHECK(det_gf2(CirculantMatrix::identity(9)) == 1);
  CHECK(det_gf2(CirculantMatrix::all_ones(7)) == 0);
  CHECK(det_gf2(circ("1110000", 7)) == 1);
  CHECK_FALSE(nullspace_contains_all_ones(CirculantMatrix::all_ones(7)));
  CHECK(nullspace_contains_all_ones(circ("11", 9)));
  CHECK_FALSE(nullspace_contains_all_ones(CirculantMatrix::identity(9)));
  CHECK(is_permutation_circulant(CirculantMatrix::identity(5)));
  CHECK_FALSE(is_permutation_circulant(CirculantMatrix::all_ones(5)));
  CHECK(is_permutation_circulant(circ("01", 5)));
}

TEST_CASE("invertible circulant counts") {
  CHECK(enumerate_invertible_circulants(3).count == 3);
  CHECK(enumerate_invertible_circulants(5).count == 15);
  CHECK(enumerate_invertible_circulants(7).count == 49);
  const auto kept = enumerate_invertible_circulants(5, 13, true);
  CHECK(kept.matrices.size() == 15);
  CHECK_THROWS_AS(enumerate_invertible_circulants(17), BudgetExceeded);
}

TEST_CASE("rho is a ring isomorphism on random pairs (p <= 127)") {
  oracle::Gen gen(5);
  for (int t = 0; t < 300; ++t) {
    const std::size_t p = 2 + gen.below(126);
    const auto a = GroupAlgebraElement::from_bitstring(gen.bitstring(p), p);
    const auto b = GroupAlgebraElement::from_bitstring(gen.bitstring(p), p);
    REQUIRE(rho(a + b) == matadd(rho(a), rho(b)));
    REQUIRE(rho(a * b) == matmul(rho(a), rho(b)));
    REQUIRE(rho_inv(rho(a)) == a);
  }
}

TEST_CASE("convolution product equals dense product (p <= 31)") {
  oracle::Gen gen(6);
  for (int t = 0; t < 300; ++t) {
    const std::size_t p = 2 + gen.below(30);
    const auto a = circ(gen.bitstring(p), p);
    const auto b = circ(gen.bitstring(p), p);
    const auto prod = matmul(a, b);
    REQUIRE(prod.to_dense() == a.to_dense() * b.to_dense());
    REQUIRE(to_matrix(prod.to_dense()) == oracle::mat_mul_gf2(dense_oracle(a), dense_oracle(b)));
  }
}

TEST_CASE("det = 1 iff unit: exhaustive for p <= 13") {
  for (std::size_t p : {3u, 5u, 7u, 11u, 13u}) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << p); ++m) {
      const auto a = GroupAlgebraElement::from_mask(m, p);
      const auto c = rho(a);
      REQUIRE((det_gf2(c) == 1) == galgebra::is_unit(a));
      REQUIRE(nullspace_contains_all_ones(c) == (galgebra::augmentation(a) == 0));
    }
  }
}

TEST_CASE("det = 1 iff unit: random samples up to p = 127") {
  oracle::Gen gen(8);
  for (int t = 0; t < 10000; ++t) {
    const std::size_t p = 2 + gen.below(126);
    const auto a = GroupAlgebraElement::from_bitstring(gen.bitstring(p), p);
    REQUIRE((det_gf2(rho(a)) == 1) == galgebra::is_unit(a));
  }
}

TEST_CASE("dense determinant matches the schoolbook oracle") {
  oracle::Gen gen(9);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + gen.below(40);
    oracle::Matrix m(n);
    std::vector<std::string> rows;
    for (auto& r : m) {
      r = gen.bits(n);
      rows.push_back(oracle::to_bitstring(r));
    }
    const auto d = DenseBitMatrix::from_rows(rows);
    REQUIRE(det_gf2(d) == oracle::det_gf2(m));
    REQUIRE(d.to_rows() == rows);
  }
}

TEST_CASE("dense matrix power") {
  oracle::Gen gen(10);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + gen.below(20);
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(gen.bitstring(n));
    const auto a = DenseBitMatrix::from_rows(rows);
    const std::uint64_t e = gen.below(12);
    auto acc = DenseBitMatrix::identity(n);
    for (std::uint64_t k = 0; k < e; ++k) acc = acc * a;
    REQUIRE(matrix_power(a, e) == acc);
  }
}
