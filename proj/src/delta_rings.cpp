#include "mersenne/delta_rings.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <functional>
#include <stdexcept>

#include "mersenne/errors.hpp"
#include "mersenne/group_algebra.hpp"
#include "mersenne/numtheory.hpp"
#include "mersenne/parallel.hpp"

namespace mersenne::delta {

unsigned GroupShape::order() const {
  unsigned out = 1;
  for (unsigned i = 0; i < r; ++i) out *= n;
  return out;
}

std::string GroupShape::to_string() const {
  if (r == 0 || n == 1) return "C1";
  return r == 1 ? "C" + std::to_string(n) : "C" + std::to_string(n) + "^" + std::to_string(r);
}

GroupShape parse_group_shape(std::string_view text) {
  if (text == "trivial" || text == "1") return {1, 0};
  auto bad = [&] {
    return std::invalid_argument("group shape must look like C7 or C2^3, got '" +
                                 std::string(text) + "'");
  };
  if (text.size() < 2 || (text[0] != 'C' && text[0] != 'c')) throw bad();
  text.remove_prefix(1);
  GroupShape shape{0, 1};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), shape.n);
  if (ec != std::errc{} || shape.n == 0) throw bad();
  text.remove_prefix(static_cast<std::size_t>(ptr - text.data()));
  if (!text.empty()) {
    if (text[0] != '^') throw bad();
    text.remove_prefix(1);
    auto [ptr2, ec2] = std::from_chars(text.data(), text.data() + text.size(), shape.r);
    if (ec2 != std::errc{} || ptr2 != text.data() + text.size()) throw bad();
  }
  if (shape.n == 1) shape.r = 0;
  return shape;
}

SmallGroupAlgebra::SmallGroupAlgebra(unsigned q, GroupShape shape)
    : field_(&SmallField::get(q)), shape_(shape), dim_(shape.order()) {
  if (dim_ > 4096) throw std::invalid_argument("group too large for a dense group algebra");
  count_ = 1;
  for (unsigned i = 0; i < dim_; ++i) {
    if (count_ > UINT64_MAX / q) {
      count_ = UINT64_MAX;
      break;
    }
    count_ *= q;
  }
  group_add_.resize(static_cast<std::size_t>(dim_) * dim_);
  for (unsigned g = 0; g < dim_; ++g) {
    for (unsigned h = 0; h < dim_; ++h) {
      unsigned a = g, b = h, sum = 0, place = 1;
      for (unsigned i = 0; i < shape_.r; ++i) {
        sum += ((a % shape_.n + b % shape_.n) % shape_.n) * place;
        a /= shape_.n;
        b /= shape_.n;
        place *= shape_.n;
      }
      group_add_[g * dim_ + h] = static_cast<std::uint16_t>(sum);
    }
  }
}

void SmallGroupAlgebra::decode(std::uint64_t index, Element& out) const {
  out.resize(dim_);
  const unsigned q = field_->size();
  for (unsigned g = 0; g < dim_; ++g) {
    out[g] = static_cast<std::uint8_t>(index % q);
    index /= q;
  }
}

std::uint64_t SmallGroupAlgebra::encode(const Element& a) const {
  std::uint64_t index = 0;
  for (unsigned g = dim_; g-- > 0;) index = index * field_->size() + a[g];
  return index;
}

SmallGroupAlgebra::Element SmallGroupAlgebra::one() const {
  Element e(dim_, 0);
  e[0] = 1;
  return e;
}

bool SmallGroupAlgebra::is_one(const Element& a) const {
  if (a[0] != 1) return false;
  return std::all_of(a.begin() + 1, a.end(), [](auto c) { return c == 0; });
}

void SmallGroupAlgebra::mul(const Element& a, const Element& b, Element& out) const {
  out.assign(dim_, 0);
  const SmallField& k = *field_;
  for (unsigned g = 0; g < dim_; ++g) {
    if (!a[g]) continue;
    const std::uint16_t* row = group_add_.data() + static_cast<std::size_t>(g) * dim_;
    for (unsigned h = 0; h < dim_; ++h) {
      if (!b[h]) continue;
      out[row[h]] = k.add(out[row[h]], k.mul(a[g], b[h]));
    }
  }
}

SmallGroupAlgebra::Element SmallGroupAlgebra::mul(const Element& a, const Element& b) const {
  Element out;
  mul(a, b, out);
  return out;
}

SmallGroupAlgebra::Element SmallGroupAlgebra::pow(const Element& a, std::uint64_t e) const {
  Element result = one(), base = a, tmp;
  while (e) {
    if (e & 1) {
      mul(result, base, tmp);
      result.swap(tmp);
    }
    e >>= 1;
    if (e) {
      mul(base, base, tmp);
      base.swap(tmp);
    }
  }
  return result;
}

bool SmallGroupAlgebra::is_unit_regular(const Element& a) const {
  const SmallField& k = *field_;
  const unsigned n = dim_;
  // Column h of left multiplication by a is a * h: entry (g + h, h) = a[g].
  std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
  for (unsigned g = 0; g < n; ++g) {
    if (!a[g]) continue;
    for (unsigned h = 0; h < n; ++h) m[group_add_[g * n + h] * n + h] = a[g];
  }
  for (unsigned col = 0; col < n; ++col) {
    unsigned pivot = col;
    while (pivot < n && m[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return false;
    if (pivot != col) {
      for (unsigned j = 0; j < n; ++j) std::swap(m[pivot * n + j], m[col * n + j]);
    }
    const std::uint8_t inv = k.inv(m[col * n + col]);
    for (unsigned r = col + 1; r < n; ++r) {
      const std::uint8_t v = m[r * n + col];
      if (!v) continue;
      const std::uint8_t factor = k.neg(k.mul(v, inv));
      for (unsigned j = col; j < n; ++j) {
        m[r * n + j] = k.add(m[r * n + j], k.mul(factor, m[col * n + j]));
      }
    }
  }
  return true;
}

namespace {

void check_budget(const SmallGroupAlgebra& alg, std::uint64_t budget) {
  if (alg.element_count() > budget) {
    throw BudgetExceeded("F_" + std::to_string(alg.field().size()) + "[" +
                         alg.shape().to_string() + "] has " +
                         (alg.element_count() == UINT64_MAX ? std::string(">= 2^64")
                                                            : std::to_string(alg.element_count())) +
                         " elements, over the budget of " + std::to_string(budget));
  }
}

constexpr std::uint64_t kInverseSearchMaxElements = 1024;

UnitStrategy resolve(const SmallGroupAlgebra& alg, UnitStrategy s) {
  if (s != UnitStrategy::Auto) return s;
  if (alg.field().size() == 2 && alg.shape().r == 1 && alg.shape().n <= 62) {
    return UnitStrategy::GroupAlgebraGcd;
  }
  if (alg.element_count() <= kInverseSearchMaxElements) return UnitStrategy::InverseSearch;
  return UnitStrategy::RegularRepresentation;
}

// Decides unit-ness for element `index` (already decoded into `a`).
class UnitOracle {
public:
  UnitOracle(const SmallGroupAlgebra& alg, UnitStrategy strategy)
      : alg_(alg), strategy_(resolve(alg, strategy)) {
    if (strategy_ == UnitStrategy::GroupAlgebraGcd &&
        (alg.field().size() != 2 || alg.shape().r != 1 || alg.shape().n > 62)) {
      throw std::invalid_argument("gcd unit strategy applies only to F2[C_n]");
    }
    if (strategy_ == UnitStrategy::InverseSearch) build_inverse_table();
  }

  bool operator()(std::uint64_t index, const SmallGroupAlgebra::Element& a) const {
    switch (strategy_) {
      case UnitStrategy::GroupAlgebraGcd:
        return galgebra::is_unit(galgebra::GroupAlgebraElement::from_mask(index, alg_.shape().n));
      case UnitStrategy::InverseSearch:
        return is_unit_[index] != 0;
      default:
        return alg_.is_unit_regular(a);
    }
  }

private:
  void build_inverse_table() {
    const std::uint64_t count = alg_.element_count();
    is_unit_.assign(count, 0);
    std::vector<std::uint8_t> known(count, 0);
    SmallGroupAlgebra::Element a, b, prod;
    for (std::uint64_t i = 0; i < count; ++i) {
      if (known[i]) continue;
      known[i] = 1;
      alg_.decode(i, a);
      for (std::uint64_t j = 0; j < count; ++j) {
        alg_.decode(j, b);
        alg_.mul(a, b, prod);
        if (alg_.is_one(prod)) {
          is_unit_[i] = is_unit_[j] = 1;
          known[j] = 1;
          break;
        }
      }
    }
  }

  const SmallGroupAlgebra& alg_;
  UnitStrategy strategy_;
  std::vector<std::uint8_t> is_unit_;
};

// For each exponent e in `exponents`: every unit u satisfies u^e == 1.
std::vector<bool> unit_exponent_profile(unsigned q, GroupShape group,
                                        const std::vector<std::uint64_t>& exponents,
                                        const DeltaOptions& options) {
  const SmallGroupAlgebra alg(q, group);
  check_budget(alg, options.budget);
  const UnitOracle is_unit(alg, options.strategy);
  std::vector<std::atomic<bool>> holds(exponents.size());
  for (auto& h : holds) h = true;
  std::atomic<bool> all_failed = exponents.empty();

  parallel_ranges(alg.element_count(), 0, [&](std::uint64_t begin, std::uint64_t end) {
    SmallGroupAlgebra::Element a;
    for (std::uint64_t i = begin; i < end && !all_failed; ++i) {
      alg.decode(i, a);
      if (!is_unit(i, a)) continue;
      bool any_left = false;
      for (std::size_t e = 0; e < exponents.size(); ++e) {
        if (!holds[e]) continue;
        if (!alg.is_one(alg.pow(a, exponents[e]))) holds[e] = false;
        any_left = any_left || holds[e];
      }
      if (!any_left) all_failed = true;
    }
  });
  return {holds.begin(), holds.end()};
}

}  // namespace

bool is_delta_n_ring(unsigned q, GroupShape group, std::uint64_t delta, const DeltaOptions& options) {
  if (delta == 0) throw std::invalid_argument("delta must be positive");
  return unit_exponent_profile(q, group, {delta}, options)[0];
}

bool is_strict_delta_n(unsigned q, GroupShape group, std::uint64_t delta, const DeltaOptions& options) {
  if (delta == 0) throw std::invalid_argument("delta must be positive");
  const auto divs = numtheory::divisors(delta);  // ascending, ends with delta
  const auto holds = unit_exponent_profile(q, group, divs, options);
  if (!holds.back()) return false;
  return std::none_of(holds.begin(), holds.end() - 1, [](bool h) { return h; });
}

std::vector<std::uint64_t> unit_indices(unsigned q, GroupShape group, const DeltaOptions& options) {
  const SmallGroupAlgebra alg(q, group);
  check_budget(alg, options.budget);
  const UnitOracle is_unit(alg, options.strategy);
  std::vector<std::uint64_t> out;
  SmallGroupAlgebra::Element a;
  for (std::uint64_t i = 0; i < alg.element_count(); ++i) {
    alg.decode(i, a);
    if (is_unit(i, a)) out.push_back(i);
  }
  return out;
}

std::vector<unsigned> delta_field_classification(std::uint64_t delta) {
  if (!numtheory::is_prime(delta)) throw std::invalid_argument("delta must be prime");
  std::vector<unsigned> out{2};
  if (delta == 2) out.push_back(3);
  if (numtheory::is_power_of_two(delta + 1) && delta + 1 > 2 && delta + 1 <= 256) {
    out.push_back(static_cast<unsigned>(delta + 1));
  }
  return out;
}

std::vector<unsigned> delta_fields_by_enumeration(std::uint64_t delta, unsigned max_q) {
  std::vector<unsigned> out;
  for (unsigned q = 2; q <= max_q; ++q) {
    if (prime_power_decompose(q).first == 0) continue;
    const SmallField& k = SmallField::get(q);
    bool all = true;
    for (unsigned u = 1; u < q && all; ++u) {
      // Square-and-multiply on the multiplication table.
      unsigned result = 1, base = u;
      for (std::uint64_t e = delta; e; e >>= 1) {
        if (e & 1) result = k.mul(result, base);
        base = k.mul(base, base);
      }
      all = result == 1;
    }
    if (all) out.push_back(q);
  }
  return out;
}

bool frobenius_fixed_check(unsigned q, GroupShape group, const DeltaOptions& options) {
  const unsigned p = group.n;
  if (!(q == 2 || (q == p + 1 && numtheory::is_power_of_two(q)))) {
    throw std::invalid_argument("frobenius_fixed_check requires q == 2 or q == n + 1 a power of two");
  }
  const SmallGroupAlgebra alg(q, group);
  check_budget(alg, options.budget);
  std::atomic<bool> holds = true;
  parallel_ranges(alg.element_count(), 0, [&](std::uint64_t begin, std::uint64_t end) {
    SmallGroupAlgebra::Element t;
    for (std::uint64_t i = begin; i < end && holds; ++i) {
      alg.decode(i, t);
      if (alg.pow(t, p + 1) != t) holds = false;
    }
  });
  return holds;
}

}  // namespace mersenne::delta
