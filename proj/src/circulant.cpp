#include "mersenne/circulant.hpp"

namespace mersenne::circulant {

DenseBitMatrix CirculantMatrix::to_dense() const {
  const std::size_t p = size();
  DenseBitMatrix m(p);
  for (std::size_t k = 0; k < p; ++k) {
    if (!column_.coeff(k)) continue;
    // c_k sits on the k-th cyclic subdiagonal.
    for (std::size_t j = 0; j < p; ++j) m.set((j + k) % p, j, true);
  }
  return m;
}

CirculantMatrix matadd(const CirculantMatrix& a, const CirculantMatrix& b) {
  return CirculantMatrix(a.first_column() + b.first_column());
}

CirculantMatrix matmul(const CirculantMatrix& a, const CirculantMatrix& b) {
  return CirculantMatrix(a.first_column() * b.first_column());
}

CirculantMatrix matpow(const CirculantMatrix& a, std::uint64_t e) {
  return CirculantMatrix(galgebra::pow(a.first_column(), e));
}

int det_gf2(const CirculantMatrix& a) { return det_gf2(a.to_dense()); }

bool nullspace_contains_all_ones(const CirculantMatrix& a) {
  const auto dense = a.to_dense();
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense.row_weight(i) & 1u) return false;
  }
  return true;
}

bool is_permutation_circulant(const CirculantMatrix& a) { return a.first_column().weight() == 1; }

bool has_order_dividing_p(const CirculantMatrix& a) {
  return matpow(a, a.size()) == CirculantMatrix::identity(a.size());
}

InvertibleCirculants enumerate_invertible_circulants(std::size_t p, std::size_t max_p,
                                                     bool keep_list) {
  InvertibleCirculants out;
  galgebra::for_each_element(p, max_p, [&](const galgebra::GroupAlgebraElement& column) {
    CirculantMatrix m(column);
    if (det_gf2(m) == 1) {
      ++out.count;
      if (keep_list) out.matrices.push_back(std::move(m));
    }
  });
  return out;
}

}  // namespace mersenne::circulant
