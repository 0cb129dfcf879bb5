#include "mersenne/characterize.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "mersenne/bigint.hpp"
#include "mersenne/bigraph.hpp"
#include "mersenne/circulant.hpp"
#include "mersenne/group_algebra.hpp"
#include "mersenne/numtheory.hpp"
#include "mersenne/parallel.hpp"

namespace mersenne::characterize {

const char* to_string(EvaluatorKind kind) {
  switch (kind) {
    case EvaluatorKind::Direct:
      return "direct";
    case EvaluatorKind::Oracle:
      return "oracle";
    case EvaluatorKind::Witnessed:
      return "witnessed";
  }
  return "unknown";
}

bool PrimeProfile::consistent() const {
  return t1_agree && t2_agree && !(mersenne && two_rooted && p != 3);
}

namespace {

using galgebra::GroupAlgebraElement;
using circulant::CirculantMatrix;
using bigraph::BipartiteCirculantGraph;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool value;
  EvaluatorKind kind;
  std::string route;
};

BigInt two_pow_p_minus_1_minus_1(std::uint64_t p) { return (BigInt{1} << (p - 1)) - 1; }

GroupAlgebraElement one_x_x2(std::size_t p) { return GroupAlgebraElement::from_exponents(p, {0, 1, 2}); }

// Visits every circulant of size p until fn returns false; returns whether all passed.
bool all_circulants(std::size_t p, std::size_t cap,
                    const std::function<bool(const CirculantMatrix&)>& fn) {
  bool ok = true;
  const std::uint64_t count = std::uint64_t{1} << p;
  galgebra::check_enumeration_budget(p, cap, "circulant scan");
  for (std::uint64_t mask = 0; mask < count && ok; ++mask) {
    ok = fn(CirculantMatrix(GroupAlgebraElement::from_mask(mask, p)));
  }
  return ok;
}

// Statement (4) of the Mersenne theorem, scaled: with unit group a product of
// cyclic groups of order 2^ord - 1, every unit has order dividing p iff
// 2^ord - 1 == p.
bool mersenne_unit_exponent_direct(std::uint64_t p) {
  const std::uint64_t ord = numtheory::mult_order(2, p);
  return ord < 64 && (std::uint64_t{1} << ord) - 1 == p;
}

Verdict t1_verdict(std::uint64_t p, int k, const EvaluationOptions& opt) {
  const std::size_t n = p;
  switch (k) {
    case 1:
      return {numtheory::is_mersenne_prime(p), EvaluatorKind::Direct, "numtheory.is_mersenne_prime"};
    case 2:
    case 3: {
      auto v = t1_verdict(p, 4, opt);
      return {v.value, EvaluatorKind::Witnessed, "witness F2[C_p] via T1(4): " + v.route};
    }
    case 4:
      if (p <= opt.oracle_cap_p) {
        bool all = true;
        for (const auto& u : galgebra::enumerate_units(p, opt.oracle_cap_p)) {
          if (!u.is_one() && !galgebra::has_order_exactly_p(u)) {
            all = false;
            break;
          }
        }
        return {all, EvaluatorKind::Oracle, "galgebra.enumerate_units + has_order_exactly_p"};
      }
      return {mersenne_unit_exponent_direct(p), EvaluatorKind::Direct, "2^ord_p(2) - 1 == p"};
    case 5:
      return {galgebra::pow(one_x_x2(n), p).is_one(), EvaluatorKind::Direct,
              "galgebra.pow(1+x+x^2, p) == 1"};
    case 6: {
      const auto lhs = galgebra::pow(GroupAlgebraElement::from_exponents(n, {0, 1}), p);
      const auto rhs = galgebra::pow(GroupAlgebraElement::from_exponents(n, {0, 3}), p);
      return {lhs == rhs, EvaluatorKind::Direct, "galgebra.pow(1+x, p) == galgebra.pow(1+x^3, p)"};
    }
    case 7:
      return {numtheory::triple_symmetry(p), EvaluatorKind::Direct, "numtheory.triple_symmetry"};
    case 8:
      if (p <= opt.oracle_cap_p) {
        const auto inv = circulant::enumerate_invertible_circulants(n, opt.oracle_cap_p, true);
        const bool all = std::all_of(inv.matrices.begin(), inv.matrices.end(),
                                     [&](const CirculantMatrix& a) {
                                       return circulant::has_order_dividing_p(a);
                                     });
        return {all, EvaluatorKind::Oracle, "circulant.enumerate_invertible_circulants + matpow"};
      }
      return {mersenne_unit_exponent_direct(p), EvaluatorKind::Direct,
              "alias T1(4) direct: 2^ord_p(2) - 1 == p"};
    case 9: {
      const auto c = circulant::matpow(CirculantMatrix(one_x_x2(n)), p);
      return {c == CirculantMatrix::identity(n), EvaluatorKind::Direct,
              "circulant.matpow(circ(1,1,1,0,...), p) == I"};
    }
    case 10: {
      const auto a = circulant::matpow(CirculantMatrix(GroupAlgebraElement::from_exponents(n, {0, 1})), p);
      const auto b = circulant::matpow(CirculantMatrix(GroupAlgebraElement::from_exponents(n, {0, 3})), p);
      return {a == b, EvaluatorKind::Direct,
              "circulant.matpow(circ(1,1,0,...), p) == circulant.matpow(circ(1,0,0,1,0,...), p)"};
    }
    case 11:
      if (p <= opt.graph_oracle_cap_p) {
        const bool all = all_circulants(n, opt.graph_oracle_cap_p, [&](const CirculantMatrix& m) {
          const BipartiteCirculantGraph g(m);
          return bigraph::matching_parity(g) == 0 || bigraph::pseudopath_parity(g, p).is_kronecker_delta();
        });
        return {all, EvaluatorKind::Oracle, "bigraph scan: odd matchings => s_ij(p) mod 2 == delta_ij"};
      }
      {
        auto v = t1_verdict(p, 8, opt);
        return {v.value, v.kind, "alias T1(8): " + v.route};
      }
    case 12: {
      const BipartiteCirculantGraph g{CirculantMatrix(one_x_x2(n))};
      return {bigraph::pseudopath_parity(g, p).is_kronecker_delta(), EvaluatorKind::Direct,
              "bigraph.pseudopath_parity(circ(1,1,1,0,...), p) == delta"};
    }
    default:
      throw std::invalid_argument("Mersenne statement id must be in 1..12, got " + std::to_string(k));
  }
}

Verdict t2_verdict(std::uint64_t p, int k, const EvaluationOptions& opt) {
  const std::size_t n = p;
  switch (k) {
    case 1:
      return {numtheory::is_two_rooted(p), EvaluatorKind::Direct, "numtheory.is_two_rooted"};
    case 2:
      if (p <= opt.oracle_cap_p) {
        const auto units = galgebra::enumerate_units(p, opt.oracle_cap_p);
        return {BigInt{units.size()} == two_pow_p_minus_1_minus_1(p), EvaluatorKind::Oracle,
                "|galgebra.enumerate_units| == 2^(p-1) - 1"};
      }
      return {galgebra::unit_count(p) == two_pow_p_minus_1_minus_1(p), EvaluatorKind::Direct,
              "galgebra.unit_count == 2^(p-1) - 1"};
    case 3:
      if (p <= opt.oracle_cap_p) {
        bool only_group = true;
        for (const auto& u : galgebra::enumerate_units(p, opt.oracle_cap_p)) {
          if (galgebra::has_order_exactly_p(u) && u.weight() != 1) {
            only_group = false;
            break;
          }
        }
        return {only_group, EvaluatorKind::Oracle, "order-p units scan: all are x^i"};
      }
      return {galgebra::order_p_unit_count(p) == BigInt{p - 1}, EvaluatorKind::Direct,
              "galgebra.order_p_unit_count == p - 1"};
    case 4:
      if (p <= opt.augmentation_scan_cap_p) {
        const auto norm = GroupAlgebraElement::norm(n);
        bool all = true;
        galgebra::check_enumeration_budget(n, opt.augmentation_scan_cap_p, "augmentation scan");
        const std::uint64_t count = std::uint64_t{1} << p;
        for (std::uint64_t mask = 0; mask < count && all; ++mask) {
          const auto a = GroupAlgebraElement::from_mask(mask, n);
          if (galgebra::augmentation(a) == 1 && a != norm) all = galgebra::is_unit(a);
        }
        return {all, EvaluatorKind::Oracle, "scan: augmentation 1 and not norm => unit"};
      }
      {
        auto v = t2_verdict(p, 2, opt);
        return {v.value, v.kind, "alias T2(2): " + v.route};
      }
    case 5:
      if (p <= opt.oracle_cap_p) {
        const auto inv = circulant::enumerate_invertible_circulants(n, opt.oracle_cap_p);
        return {BigInt{inv.count} == two_pow_p_minus_1_minus_1(p), EvaluatorKind::Oracle,
                "circulant.enumerate_invertible_circulants == 2^(p-1) - 1"};
      }
      return {galgebra::unit_count(p) == two_pow_p_minus_1_minus_1(p), EvaluatorKind::Direct,
              "unit_count formula == 2^(p-1) - 1"};
    case 6:
      if (p <= opt.oracle_cap_p) {
        const bool all = all_circulants(n, opt.oracle_cap_p, [](const CirculantMatrix& a) {
          return circulant::is_permutation_circulant(a) || !circulant::has_order_dividing_p(a);
        });
        return {all, EvaluatorKind::Oracle, "circulant scan: A^p == I => permutation"};
      }
      return {galgebra::order_p_unit_count(p) == BigInt{p - 1}, EvaluatorKind::Direct,
              "order_p_unit_count == p - 1"};
    case 7:
      if (p <= opt.oracle_cap_p) {
        const auto j = CirculantMatrix::all_ones(n);
        const bool all = all_circulants(n, opt.oracle_cap_p, [&](const CirculantMatrix& a) {
          if (a == j || circulant::nullspace_contains_all_ones(a)) return true;
          return circulant::det_gf2(a) == 1;
        });
        return {all, EvaluatorKind::Oracle, "circulant scan: not J and 1 not in kernel => invertible"};
      }
      {
        auto v = t2_verdict(p, 4, opt);
        return {v.value, v.kind, "alias T2(4): " + v.route};
      }
    case 8:
      if (p <= opt.oracle_cap_p) {
        const auto count = bigraph::count_odd_matching_graphs(n, opt.oracle_cap_p);
        return {BigInt{count} == two_pow_p_minus_1_minus_1(p), EvaluatorKind::Oracle,
                "bigraph.count_odd_matching_graphs == 2^(p-1) - 1"};
      }
      {
        auto v = t2_verdict(p, 5, opt);
        return {v.value, v.kind, "alias T2(5): " + v.route};
      }
    case 9:
      if (p <= opt.oracle_cap_p) {
        const bool all = all_circulants(n, opt.oracle_cap_p, [](const CirculantMatrix& m) {
          const BipartiteCirculantGraph g(m);
          if (bigraph::degree(g) % 2 == 0 || bigraph::is_complete_bipartite(g)) return true;
          return bigraph::matching_parity(g) == 1;
        });
        return {all, EvaluatorKind::Oracle, "bigraph scan: odd degree, not complete => odd matchings"};
      }
      {
        auto v = t2_verdict(p, 7, opt);
        return {v.value, v.kind, "alias T2(7): " + v.route};
      }
    case 10:
      if (p <= opt.oracle_cap_p) {
        const bool all = all_circulants(n, opt.oracle_cap_p, [&](const CirculantMatrix& m) {
          const BipartiteCirculantGraph g(m);
          if (bigraph::matching_parity(g) == 0) return true;
          if (!bigraph::pseudopath_parity(g, p).is_kronecker_delta()) return true;
          return bigraph::degree(g) == 1;
        });
        return {all, EvaluatorKind::Oracle,
                "bigraph scan: odd matchings and s_ij(p) mod 2 == delta => degree 1"};
      }
      {
        auto v = t2_verdict(p, 6, opt);
        return {v.value, v.kind, "alias T2(6): " + v.route};
      }
    default:
      throw std::invalid_argument("2-rooted statement id must be in 1..10, got " + std::to_string(k));
  }
}

template <typename F>
StatementResult timed(int theorem, int k, F&& evaluate) {
  const auto start = Clock::now();
  Verdict v = evaluate();
  StatementResult r;
  r.theorem = theorem;
  r.statement_id = k;
  r.verdict = v.value;
  r.kind = v.kind;
  r.route = std::move(v.route);
  r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return r;
}

void require_odd_prime(std::uint64_t p) {
  if (p < 3 || !numtheory::is_prime(p)) {
    throw std::invalid_argument("expected an odd prime, got " + std::to_string(p));
  }
}

bool all_equal(const std::vector<StatementResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [&](const StatementResult& r) { return r.verdict == results.front().verdict; });
}

}  // namespace

StatementResult t1_statement(std::uint64_t p, int k, const EvaluationOptions& options) {
  require_odd_prime(p);
  if (p <= 3) throw std::invalid_argument("the Mersenne characterization requires p > 3");
  return timed(1, k, [&] { return t1_verdict(p, k, options); });
}

StatementResult t2_statement(std::uint64_t p, int k, const EvaluationOptions& options) {
  require_odd_prime(p);
  return timed(2, k, [&] { return t2_verdict(p, k, options); });
}

PrimeProfile profile(std::uint64_t p, const EvaluationOptions& options) {
  require_odd_prime(p);
  PrimeProfile out;
  out.p = p;
  out.ord2 = numtheory::mult_order(2, p);
  out.mersenne = numtheory::is_mersenne_prime(p);
  out.two_rooted = numtheory::is_two_rooted(p);
  out.mod8 = numtheory::mod8_residue(p);
  out.reduced_t1 = p == 3;
  if (out.reduced_t1) {
    for (int k : kReducedTheorem1Set) {
      out.t1_results.push_back(timed(1, k, [&] { return t1_verdict(p, k, options); }));
    }
  } else {
    for (int k = 1; k <= kTheorem1Statements; ++k) out.t1_results.push_back(t1_statement(p, k, options));
  }
  for (int k = 1; k <= kTheorem2Statements; ++k) out.t2_results.push_back(t2_statement(p, k, options));
  out.t1_agree = all_equal(out.t1_results);
  out.t2_agree = all_equal(out.t2_results);
  return out;
}

SweepResult sweep(std::uint64_t min, std::uint64_t max, const SweepOptions& options) {
  if (min > max) throw std::invalid_argument("sweep: min must not exceed max");
  std::vector<std::uint64_t> primes;
  for (auto q : numtheory::primes_in_range(std::max<std::uint64_t>(min, 3), max)) primes.push_back(q);

  SweepResult out;
  out.profiles.resize(primes.size());
  parallel_ranges(primes.size(), options.jobs, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) out.profiles[i] = profile(primes[i], options.evaluation);
  });
  std::sort(out.profiles.begin(), out.profiles.end(),
            [](const PrimeProfile& a, const PrimeProfile& b) { return a.p < b.p; });

  out.summary.prime_count = out.profiles.size();
  for (const auto& pr : out.profiles) {
    if (pr.mersenne) out.summary.mersenne.push_back(pr.p);
    if (pr.two_rooted) out.summary.two_rooted.push_back(pr.p);
    if (!pr.consistent()) out.summary.disagreements.push_back(pr.p);
  }
  return out;
}

}  // namespace mersenne::characterize
