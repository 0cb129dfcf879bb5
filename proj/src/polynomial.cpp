#include "mersenne/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace mersenne {

namespace {

using Word = BinaryPolynomial::Word;
constexpr std::size_t kBits = BinaryPolynomial::kWordBits;

// 64x64 -> 128 carry-less product.
inline void clmul(Word a, Word b, Word& lo, Word& hi) {
  lo = 0;
  hi = 0;
  while (a) {
    const int i = std::countr_zero(a);
    lo ^= b << i;
    if (i) hi ^= b >> (kBits - i);
    a &= a - 1;
  }
}

inline Word spread32(std::uint32_t x) {
  Word v = x;
  v = (v | (v << 16)) & 0x0000FFFF0000FFFFULL;
  v = (v | (v << 8)) & 0x00FF00FF00FF00FFULL;
  v = (v | (v << 4)) & 0x0F0F0F0F0F0F0F0FULL;
  v = (v | (v << 2)) & 0x3333333333333333ULL;
  v = (v | (v << 1)) & 0x5555555555555555ULL;
  return v;
}

// dst ^= src << shift; dst must be wide enough.
void xor_shifted(std::vector<Word>& dst, std::span<const Word> src, std::size_t shift) {
  const std::size_t ws = shift / kBits;
  const unsigned bs = shift % kBits;
  if (bs == 0) {
    for (std::size_t i = 0; i < src.size(); ++i) dst[i + ws] ^= src[i];
    return;
  }
  for (std::size_t i = 0; i < src.size(); ++i) {
    dst[i + ws] ^= src[i] << bs;
    dst[i + ws + 1] ^= src[i] >> (kBits - bs);
  }
}

long degree_of(const std::vector<Word>& w) {
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i]) return static_cast<long>(i * kBits) + std::bit_width(w[i]) - 1;
  }
  return -1;
}

}  // namespace

BinaryPolynomial BinaryPolynomial::monomial(std::size_t k) {
  BinaryPolynomial out;
  out.words_.assign(k / kBits + 1, 0);
  out.words_.back() = Word{1} << (k % kBits);
  return out;
}

BinaryPolynomial BinaryPolynomial::x_n_plus_one(std::size_t n) {
  auto out = monomial(n);
  out.words_[0] ^= 1;
  out.trim();
  return out;
}

BinaryPolynomial BinaryPolynomial::all_ones(std::size_t n) {
  BinaryPolynomial out;
  if (n == 0) return out;
  out.words_.assign((n + kBits - 1) / kBits, ~Word{0});
  if (n % kBits) out.words_.back() = (Word{1} << (n % kBits)) - 1;
  return out;
}

BinaryPolynomial BinaryPolynomial::from_words(std::vector<Word> words) {
  BinaryPolynomial out;
  out.words_ = std::move(words);
  out.trim();
  return out;
}

BinaryPolynomial BinaryPolynomial::from_bitstring(std::string_view bits) {
  BinaryPolynomial out;
  out.words_.assign(bits.size() / kBits + 1, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      out.words_[i / kBits] |= Word{1} << (i % kBits);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bitstring may only contain '0' and '1'");
    }
  }
  out.trim();
  return out;
}

long BinaryPolynomial::degree() const { return degree_of(words_); }

void BinaryPolynomial::set_coeff(std::size_t i, bool value) {
  const std::size_t w = i / kBits;
  if (w >= words_.size()) {
    if (!value) return;
    words_.resize(w + 1, 0);
  }
  const Word mask = Word{1} << (i % kBits);
  words_[w] = value ? (words_[w] | mask) : (words_[w] & ~mask);
  trim();
}

std::size_t BinaryPolynomial::weight() const {
  std::size_t n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

void BinaryPolynomial::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BinaryPolynomial& BinaryPolynomial::operator+=(const BinaryPolynomial& rhs) {
  if (rhs.words_.size() > words_.size()) words_.resize(rhs.words_.size(), 0);
  for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
  trim();
  return *this;
}

void BinaryPolynomial::add_shifted(const BinaryPolynomial& other, std::size_t shift) {
  if (other.is_zero()) return;
  const std::size_t need = other.words_.size() + shift / kBits + 1;
  if (words_.size() < need) words_.resize(need, 0);
  xor_shifted(words_, other.words_, shift);
  trim();
}

BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Word> r(a.words_.size() + b.words_.size(), 0);
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    if (!a.words_[i]) continue;
    for (std::size_t j = 0; j < b.words_.size(); ++j) {
      Word lo, hi;
      clmul(a.words_[i], b.words_[j], lo, hi);
      r[i + j] ^= lo;
      r[i + j + 1] ^= hi;
    }
  }
  return BinaryPolynomial::from_words(std::move(r));
}

BinaryPolynomial BinaryPolynomial::square() const {
  std::vector<Word> r(words_.size() * 2, 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    r[2 * i] = spread32(static_cast<std::uint32_t>(words_[i]));
    r[2 * i + 1] = spread32(static_cast<std::uint32_t>(words_[i] >> 32));
  }
  return from_words(std::move(r));
}

BinaryPolynomial BinaryPolynomial::derivative() const {
  // d/dx x^i = i x^(i-1): odd exponents survive, each drops to the even slot
  // below it in the same word.
  std::vector<Word> r(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    r[i] = (words_[i] >> 1) & 0x5555555555555555ULL;
  }
  return from_words(std::move(r));
}

BinaryPolynomial BinaryPolynomial::shifted(std::size_t k) const {
  BinaryPolynomial out;
  out.add_shifted(*this, k);
  return out;
}

std::string BinaryPolynomial::to_bitstring(std::size_t length) const {
  if (length == 0) length = is_zero() ? 1 : static_cast<std::size_t>(degree()) + 1;
  std::string s(length, '0');
  for (std::size_t i = 0; i < length; ++i) {
    if (coeff(i)) s[i] = '1';
  }
  return s;
}

std::string BinaryPolynomial::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  if (is_zero()) return "0x0";
  std::string s = "0x";
  const std::size_t nibbles = static_cast<std::size_t>(degree()) / 4 + 1;
  for (std::size_t n = nibbles; n-- > 0;) {
    const std::size_t bit = n * 4;
    const Word v = (words_[bit / kBits] >> (bit % kBits)) & 0xF;
    s.push_back(kDigits[v]);
  }
  return s;
}

std::strong_ordering operator<=>(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

DivMod divmod(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const long db = b.degree();
  const long da = a.degree();
  if (da < db) return {BinaryPolynomial{}, a};
  std::vector<Word> rem(a.words().begin(), a.words().end());
  rem.resize(rem.size() + 1, 0);
  std::vector<Word> quo(static_cast<std::size_t>(da - db) / kBits + 1, 0);
  for (long i = da; i >= db; --i) {
    const auto ui = static_cast<std::size_t>(i);
    if ((rem[ui / kBits] >> (ui % kBits)) & 1u) {
      const auto shift = static_cast<std::size_t>(i - db);
      xor_shifted(rem, b.words(), shift);
      quo[shift / kBits] |= Word{1} << (shift % kBits);
    }
  }
  return {BinaryPolynomial::from_words(std::move(quo)),
          BinaryPolynomial::from_words(std::move(rem))};
}

BinaryPolynomial operator%(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  return divmod(a, b).remainder;
}

BinaryPolynomial operator/(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  return divmod(a, b).quotient;
}

BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b) {
  while (!b.is_zero()) {
    a = a % b;
    std::swap(a, b);
  }
  return a;  // monic automatically over GF(2)
}

ExtendedGcd extended_gcd(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  BinaryPolynomial r0 = a, r1 = b;
  BinaryPolynomial s0 = BinaryPolynomial::one(), s1;
  BinaryPolynomial t0, t1 = BinaryPolynomial::one();
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 + q * s1);
    t0 = std::exchange(t1, t0 + q * t1);
  }
  return {std::move(r0), std::move(s0), std::move(t0)};
}

BinaryPolynomial mulmod(const BinaryPolynomial& a, const BinaryPolynomial& b,
                        const BinaryPolynomial& f) {
  return (a * b) % f;
}

BinaryPolynomial sqrmod(const BinaryPolynomial& a, const BinaryPolynomial& f) {
  return a.square() % f;
}

BinaryPolynomial powmod(BinaryPolynomial a, std::uint64_t e, const BinaryPolynomial& f) {
  BinaryPolynomial result = BinaryPolynomial::one() % f;
  a = a % f;
  while (e) {
    if (e & 1) result = mulmod(result, a, f);
    e >>= 1;
    if (e) a = sqrmod(a, f);
  }
  return result;
}

bool is_irreducible(const BinaryPolynomial& f) {
  const long d = f.degree();
  if (d < 1) return false;
  const auto x = BinaryPolynomial::monomial(1);
  BinaryPolynomial h = x % f;
  for (long i = 1; i <= d / 2; ++i) {
    h = sqrmod(h, f);
    if (!gcd(f, h + x).is_one()) return false;
  }
  return true;
}

}  // namespace mersenne
