#pragma once

// Slow reference implementations for the test suites. Nothing here touches
// the library's packed types: polynomials and matrices are plain byte
// vectors, and every routine is the schoolbook version.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using Bits = std::vector<std::uint8_t>;
using Matrix = std::vector<Bits>;

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::uint64_t order_naive(std::uint64_t a, std::uint64_t p) {
  std::uint64_t x = a % p, t = 1;
  while (x != 1) {
    x = x * a % p;
    ++t;
  }
  return t;
}

// rows[m][n] = C(m, n) mod 2 for 0 <= n <= m <= max.
inline Matrix pascal_mod2(std::size_t max) {
  Matrix rows(max + 1);
  for (std::size_t m = 0; m <= max; ++m) {
    rows[m].assign(m + 1, 1);
    for (std::size_t n = 1; n < m; ++n) rows[m][n] = rows[m - 1][n - 1] ^ rows[m - 1][n];
  }
  return rows;
}

// Cyclic convolution over GF(2), O(p^2).
inline Bits convolve(const Bits& a, const Bits& b) {
  const std::size_t p = a.size();
  Bits c(p, 0);
  for (std::size_t i = 0; i < p; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < p; ++j) c[(i + j) % p] ^= b[j];
  }
  return c;
}

inline Bits cyclic_pow(Bits a, std::uint64_t e) {
  Bits r(a.size(), 0);
  r[0] = 1;
  for (std::uint64_t k = 0; k < e; ++k) r = convolve(r, a);
  return r;
}

// ---- GF(2)[x] as coefficient vectors, lowest degree first ----

inline void trim(Bits& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Bits poly_mul(const Bits& a, const Bits& b) {
  if (a.empty() || b.empty()) return {};
  Bits c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] ^= b[j];
  }
  trim(c);
  return c;
}

inline Bits poly_mod(Bits a, const Bits& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] ^= b[i];
    trim(a);
  }
  return a;
}

inline Bits poly_from_mask(std::uint64_t mask) {
  Bits f;
  for (; mask; mask >>= 1) f.push_back(mask & 1);
  return f;
}

inline std::uint64_t poly_to_mask(const Bits& f) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < f.size(); ++i) m |= std::uint64_t{f[i]} << i;
  return m;
}

// No divisor of degree 1..deg/2.
inline bool irreducible_trial(const Bits& f) {
  const std::size_t d = f.size() - 1;
  if (d < 1) return false;
  for (std::size_t k = 1; 2 * k <= d; ++k) {
    for (std::uint64_t low = 0; low < (std::uint64_t{1} << k); ++low) {
      const Bits g = poly_from_mask(low | (std::uint64_t{1} << k));
      if (poly_mod(f, g).empty()) return false;
    }
  }
  return true;
}

// Irreducible factors of f (degree <= 62) by trial division, sorted by
// (degree, integer pattern).
inline std::vector<std::uint64_t> factor_trial(Bits f) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t g = 2; f.size() > 1;) {
    const Bits gp = poly_from_mask(g);
    if (2 * (gp.size() - 1) > f.size() - 1) {
      out.push_back(poly_to_mask(f));  // no factor up to half the degree
      break;
    }
    if (irreducible_trial(gp) && poly_mod(f, gp).empty()) {
      out.push_back(g);
      // exact division
      Bits q(f.size() - gp.size() + 1, 0), r = f;
      for (std::size_t i = q.size(); i-- > 0;) {
        if (r[i + gp.size() - 1]) {
          q[i] = 1;
          for (std::size_t j = 0; j < gp.size(); ++j) r[i + j] ^= gp[j];
        }
      }
      trim(q);
      f = q;
    } else {
      ++g;
    }
  }
  std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    const int da = 63 - __builtin_clzll(a), db = 63 - __builtin_clzll(b);
    return da != db ? da < db : a < b;
  });
  return out;
}

// ---- dense 0/1 matrices ----

inline Matrix circulant(const Bits& column) {
  const std::size_t p = column.size();
  Matrix m(p, Bits(p, 0));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) m[i][j] = column[(i + p - j) % p];
  return m;
}

inline Matrix mat_mul_gf2(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, Bits(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j) c[i][j] ^= b[k][j];
  return c;
}

inline int det_gf2(Matrix m) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && !m[piv][col]) ++piv;
    if (piv == n) return 0;
    std::swap(m[piv], m[col]);
    for (std::size_t r = col + 1; r < n; ++r)
      if (m[r][col])
        for (std::size_t c = col; c < n; ++c) m[r][c] ^= m[col][c];
  }
  return 1;
}

// perm(m) by the subset DP: f[S] = number of ways to match the first |S|
// rows into column set S.
inline std::uint64_t permanent_dp(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<std::uint64_t> f(std::size_t{1} << n, 0);
  f[0] = 1;
  for (std::uint64_t s = 0; s < f.size(); ++s) {
    if (!f[s]) continue;
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(s));
    if (row == n) continue;
    for (std::size_t c = 0; c < n; ++c)
      if (m[row][c] && !(s >> c & 1)) f[s | (std::uint64_t{1} << c)] += f[s];
  }
  return f.back();
}

using CountMatrix = std::vector<std::vector<std::uint64_t>>;

inline CountMatrix int_mat_pow(const Matrix& m, std::uint64_t r) {
  const std::size_t n = m.size();
  CountMatrix acc(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) acc[i][i] = 1;
  for (std::uint64_t step = 0; step < r; ++step) {
    CountMatrix next(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (acc[i][k])
          for (std::size_t j = 0; j < n; ++j) next[i][j] += acc[i][k] * m[k][j];
    acc = std::move(next);
  }
  return acc;
}

// Ordered edge sequences e_1..e_r with e_1 leaving a_i, e_r entering b_j, and
// the B-end of e_k sharing its subscript with the A-end of e_{k+1}.
inline std::uint64_t count_pseudopaths(const Matrix& m, std::size_t i, std::size_t j, std::uint64_t r) {
  const std::size_t n = m.size();
  std::function<std::uint64_t(std::size_t, std::uint64_t)> walk = [&](std::size_t a, std::uint64_t left) {
    std::uint64_t total = 0;
    for (std::size_t b = 0; b < n; ++b) {
      if (!m[a][b]) continue;
      if (left == 1) {
        total += b == j ? 1 : 0;
      } else {
        total += walk(b, left - 1);
      }
    }
    return total;
  };
  return walk(i, r);
}

// ---- F_q arithmetic for q in {2, 3, 4, 5, 7, 8}, built independently ----

struct Field {
  unsigned q;
  unsigned prime;
  unsigned modulus;  // for q = 4 / 8: reduction polynomial as a bit mask

  unsigned add(unsigned a, unsigned b) const { return prime == 2 ? a ^ b : (a + b) % q; }
  unsigned mul(unsigned a, unsigned b) const {
    if (prime != 2 || q == 2) return a * b % q;
    unsigned r = 0;
    for (unsigned i = 0; i < 4; ++i)
      if (b >> i & 1) r ^= a << i;
    for (int bit = 7; bit >= 0; --bit) {
      const unsigned deg = 31 - static_cast<unsigned>(__builtin_clz(modulus));
      if (static_cast<unsigned>(bit) >= deg && (r >> bit & 1)) r ^= modulus << (bit - deg);
    }
    return r;
  }
};

inline Field field(unsigned q) {
  switch (q) {
    case 4:
      return {4, 2, 0b111};
    case 8:
      return {8, 2, 0b1011};
    default:
      return {q, q, 0};
  }
}

// F_q[C_n] (single cyclic factor), elements as length-n digit vectors.
inline std::vector<unsigned> fq_conv(const Field& f, const std::vector<unsigned>& a,
                                     const std::vector<unsigned>& b) {
  const std::size_t n = a.size();
  std::vector<unsigned> c(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[(i + j) % n] = f.add(c[(i + j) % n], f.mul(a[i], b[j]));
  return c;
}

// ---- hand-rolled generators ----

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  Bits bits(std::size_t n) {
    Bits b(n);
    for (auto& v : b) v = static_cast<std::uint8_t>(rng() & 1);
    return b;
  }
  std::string bitstring(std::size_t n) {
    std::string s(n, '0');
    for (auto& c : s) c = (rng() & 1) ? '1' : '0';
    return s;
  }
  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng); }
  std::uint64_t odd_prime(std::uint64_t max) {
    for (;;) {
      const std::uint64_t c = 3 + below(max - 2);
      if (is_prime_trial(c)) return c;
    }
  }
};

inline std::string to_bitstring(const Bits& b) {
  std::string s;
  for (auto v : b) s += v ? '1' : '0';
  return s;
}

}  // namespace oracle
