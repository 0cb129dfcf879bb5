#include "doctest.h"
#include "mersenne/delta_rings.hpp"
#include "mersenne/errors.hpp"
#include "mersenne/numtheory.hpp"
#include "oracles.hpp"

#include <numeric>

using namespace mersenne;
using namespace mersenne::delta;

namespace {

// F_q[C_n^r] with elements as digit vectors indexed by group element; group
// elements are base-n digit tuples added coordinatewise.
struct OracleAlgebra {
  oracle::Field f;
  unsigned n, r, dim;

  OracleAlgebra(unsigned q, unsigned n_, unsigned r_) : f(oracle::field(q)), n(n_), r(r_), dim(1) {
    for (unsigned i = 0; i < r; ++i) dim *= n;
  }

  unsigned group_add(unsigned a, unsigned b) const {
    unsigned out = 0, scale = 1;
    for (unsigned i = 0; i < r; ++i) {
      out += ((a % n + b % n) % n) * scale;
      a /= n;
      b /= n;
      scale *= n;
    }
    return out;
  }

  std::vector<unsigned> mul(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
    std::vector<unsigned> c(dim, 0);
    for (unsigned i = 0; i < dim; ++i) {
      if (!a[i]) continue;
      for (unsigned j = 0; j < dim; ++j) {
        const unsigned k = group_add(i, j);
        c[k] = f.add(c[k], f.mul(a[i], b[j]));
      }
    }
    return c;
  }

  std::uint64_t count() const {
    std::uint64_t c = 1;
    for (unsigned i = 0; i < dim; ++i) c *= f.q;
    return c;
  }

  std::vector<unsigned> decode(std::uint64_t idx) const {
    std::vector<unsigned> a(dim);
    for (auto& v : a) {
      v = static_cast<unsigned>(idx % f.q);
      idx /= f.q;
    }
    return a;
  }

  std::vector<unsigned> one() const {
    std::vector<unsigned> e(dim, 0);
    e[0] = 1;
    return e;
  }

  // Units by full inverse search, then the exponent (lcm of unit orders).
  std::pair<std::vector<std::uint64_t>, std::uint64_t> units_and_exponent() const {
    std::vector<std::uint64_t> units;
    std::uint64_t exponent = 1;
    const auto e = one();
    for (std::uint64_t i = 0; i < count(); ++i) {
      const auto a = decode(i);
      bool unit = false;
      for (std::uint64_t j = 0; j < count() && !unit; ++j) unit = mul(a, decode(j)) == e;
      if (!unit) continue;
      units.push_back(i);
      std::uint64_t ord = 1;
      for (auto x = a; x != e; x = mul(x, a)) ++ord;
      exponent = std::lcm(exponent, ord);
    }
    return {units, exponent};
  }
};

struct Case {
  unsigned q, n, r;
};

}  // namespace

TEST_CASE("group shape parsing") {
  CHECK(parse_group_shape("C7") == GroupShape{7, 1});
  CHECK(parse_group_shape("C2^3") == GroupShape{2, 3});
  CHECK(parse_group_shape("trivial").order() == 1);
  CHECK(parse_group_shape("C1").order() == 1);
  CHECK(GroupShape{2, 3}.to_string() == "C2^3");
  CHECK(GroupShape{7, 1}.to_string() == "C7");
  CHECK_THROWS_AS(parse_group_shape("D4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group_shape("C"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group_shape("C2^"), std::invalid_argument);
}

TEST_CASE("small fields") {
  CHECK(SmallField::get(4).modulus() == std::vector<unsigned>{1, 1, 1});
  CHECK(SmallField::get(8).modulus() == std::vector<unsigned>{1, 1, 0, 1});
  CHECK(SmallField::get(7).modulus().empty());
  CHECK(prime_power_decompose(81) == std::pair<unsigned, unsigned>{3, 4});
  CHECK(prime_power_decompose(12) == std::pair<unsigned, unsigned>{0, 0});
  CHECK_THROWS_AS(SmallField::get(6), std::invalid_argument);
  CHECK_THROWS_AS(SmallField::get(257), std::invalid_argument);
  for (unsigned q = 2; q <= 256; ++q) {
    if (prime_power_decompose(q).first == 0) continue;
    const auto& k = SmallField::get(q);
    REQUIRE(k.verify_axioms());
    REQUIRE(k.size() == q);
    // the generator has order q - 1
    unsigned x = k.generator(), ord = 1;
    while (x != 1) {
      x = k.mul(x, k.generator());
      ++ord;
    }
    REQUIRE(ord == q - 1);
  }
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u}) {
    const auto f = oracle::field(q);
    const auto& k = SmallField::get(q);
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b) {
        REQUIRE(k.add(a, b) == f.add(a, b));
        REQUIRE(k.mul(a, b) == f.mul(a, b));
      }
  }
}

TEST_CASE("delta ring examples") {
  CHECK(is_delta_n_ring(2, {2, 1}, 2));
  CHECK(is_delta_n_ring(4, {3, 1}, 3));
  CHECK_FALSE(is_delta_n_ring(2, {5, 1}, 5));
  CHECK(is_strict_delta_n(3, {2, 1}, 2));
  CHECK(is_strict_delta_n(2, parse_group_shape("trivial"), 1));
  CHECK(is_strict_delta_n(3, {2, 2}, 2));
  CHECK_FALSE(is_strict_delta_n(3, {2, 1}, 4));
  for (unsigned r = 1; r <= 3; ++r) {
    CHECK(is_delta_n_ring(2, {2, r}, 2));
    CHECK(is_delta_n_ring(3, {2, r}, 2));
  }
  CHECK(is_delta_n_ring(2, {3, 2}, 3));
  CHECK(is_delta_n_ring(4, {3, 2}, 3));
  CHECK(is_delta_n_ring(2, {7, 1}, 7));
  for (unsigned p : {5u, 11u, 13u}) CHECK_FALSE(is_delta_n_ring(2, {p, 1}, p));
  CHECK_THROWS_AS(is_delta_n_ring(4, {3, 3}, 3), BudgetExceeded);
  CHECK_THROWS_AS(is_delta_n_ring(2, {7, 1}, 7, {64, UnitStrategy::Auto}), BudgetExceeded);
}

TEST_CASE("verdicts and unit sets match the inverse-search oracle") {
  const Case cases[] = {{2, 3, 1}, {2, 5, 1}, {2, 7, 1}, {2, 2, 2}, {2, 2, 3}, {2, 3, 2}, {3, 2, 1}, {3, 3, 1},
                        {3, 4, 1}, {3, 2, 2}, {4, 3, 1}, {4, 2, 2}, {5, 2, 1}, {5, 3, 1}, {7, 2, 1}, {8, 2, 1}};
  for (const auto& c : cases) {
    CAPTURE(c.q);
    CAPTURE(c.n);
    CAPTURE(c.r);
    const OracleAlgebra alg(c.q, c.n, c.r);
    const auto [units, exponent] = alg.units_and_exponent();
    const GroupShape g{c.n, c.r};
    for (auto s : {UnitStrategy::Auto, UnitStrategy::InverseSearch, UnitStrategy::RegularRepresentation}) {
      REQUIRE(unit_indices(c.q, g, {kDefaultBudget, s}) == units);
    }
    for (std::uint64_t d = 1; d <= 2 * exponent + 2; ++d) {
      REQUIRE(is_delta_n_ring(c.q, g, d) == (d % exponent == 0));
      REQUIRE(is_strict_delta_n(c.q, g, d) == (d == exponent));
    }
  }
}

TEST_CASE("gcd route, inverse search and regular representation agree on F2[C_n]") {
  for (unsigned n : {3u, 5u, 7u, 9u, 11u}) {
    const GroupShape g{n, 1};
    const auto gcd = unit_indices(2, g, {kDefaultBudget, UnitStrategy::GroupAlgebraGcd});
    CHECK(unit_indices(2, g, {kDefaultBudget, UnitStrategy::InverseSearch}) == gcd);
    CHECK(unit_indices(2, g, {kDefaultBudget, UnitStrategy::RegularRepresentation}) == gcd);
  }
  CHECK_THROWS_AS(unit_indices(3, {2, 1}, {kDefaultBudget, UnitStrategy::GroupAlgebraGcd}), std::invalid_argument);
}

TEST_CASE("element arithmetic matches the oracle algebra") {
  oracle::Gen gen(21);
  const Case cases[] = {{3, 2, 2}, {4, 3, 1}, {8, 7, 1}, {5, 3, 2}, {2, 2, 3}};
  for (const auto& c : cases) {
    const SmallGroupAlgebra alg(c.q, {c.n, c.r});
    const OracleAlgebra ref(c.q, c.n, c.r);
    for (int t = 0; t < 50; ++t) {
      const auto i = gen.below(alg.element_count()), j = gen.below(alg.element_count());
      SmallGroupAlgebra::Element a, b;
      alg.decode(i, a);
      alg.decode(j, b);
      REQUIRE(alg.encode(a) == i);
      const auto prod = alg.mul(a, b);
      const auto expect = ref.mul(ref.decode(i), ref.decode(j));
      REQUIRE(std::vector<unsigned>(prod.begin(), prod.end()) == expect);
      REQUIRE(alg.pow(a, 3) == alg.mul(alg.mul(a, a), a));
    }
  }
}

TEST_CASE("field classification for prime delta") {
  CHECK(delta_field_classification(2) == std::vector<unsigned>{2, 3});
  CHECK(delta_field_classification(7) == std::vector<unsigned>{2, 8});
  CHECK(delta_field_classification(5) == std::vector<unsigned>{2});
  CHECK_THROWS_AS(delta_field_classification(6), std::invalid_argument);
  for (auto d : numtheory::primes_in_range(2, 300)) {
    const auto closed = delta_field_classification(d);
    REQUIRE(delta_fields_by_enumeration(d) == closed);
    // F_q^x is cyclic of order q - 1, so u^d = 1 for all units iff (q - 1) | d
    std::vector<unsigned> divisibility;
    for (unsigned q = 2; q <= 256; ++q)
      if (prime_power_decompose(q).first != 0 && d % (q - 1) == 0) divisibility.push_back(q);
    REQUIRE(divisibility == closed);
  }
}

TEST_CASE("Frobenius identity t^(p+1) = t") {
  CHECK(frobenius_fixed_check(4, {3, 1}));
  CHECK_FALSE(frobenius_fixed_check(2, {2, 1}));
  CHECK(frobenius_fixed_check(2, {3, 1}));
  CHECK(frobenius_fixed_check(2, {7, 1}));
  CHECK(frobenius_fixed_check(4, {3, 2}));
  CHECK_FALSE(frobenius_fixed_check(2, {5, 1}));
  CHECK_THROWS_AS(frobenius_fixed_check(3, {2, 1}), std::invalid_argument);
}
