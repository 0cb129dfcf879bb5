#include "doctest.h"
#include "mersenne/characterize.hpp"
#include "mersenne/numtheory.hpp"

#include <stdexcept>

using namespace mersenne;
using namespace mersenne::characterize;

namespace {

bool all_verdicts(const std::vector<StatementResult>& rs, bool value) {
  for (const auto& r : rs)
    if (r.verdict != value) return false;
  return true;
}

}  // namespace

TEST_CASE("single statements") {
  CHECK(t1_statement(7, 5).verdict);
  CHECK_FALSE(t1_statement(5, 9).verdict);
  CHECK(t1_statement(31, 7).verdict);
  CHECK(t2_statement(5, 2).verdict);
  CHECK_FALSE(t2_statement(7, 3).verdict);
  CHECK(t2_statement(13, 1).verdict);

  CHECK(t1_statement(7, 2).kind == EvaluatorKind::Witnessed);
  CHECK(t1_statement(7, 3).kind == EvaluatorKind::Witnessed);
  CHECK(t1_statement(7, 4).kind == EvaluatorKind::Oracle);
  CHECK(t1_statement(31, 4).kind == EvaluatorKind::Direct);
  CHECK(t1_statement(7, 4, EvaluationOptions::direct_only()).kind == EvaluatorKind::Direct);
  CHECK(t1_statement(7, 1).theorem == 1);
  CHECK(t2_statement(7, 10).statement_id == 10);
}

TEST_CASE("argument errors") {
  CHECK_THROWS_AS(t1_statement(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(t1_statement(9, 1), std::invalid_argument);
  CHECK_THROWS_AS(t1_statement(7, 0), std::invalid_argument);
  CHECK_THROWS_AS(t1_statement(7, 13), std::invalid_argument);
  CHECK_THROWS_AS(t2_statement(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(t2_statement(7, 11), std::invalid_argument);
  CHECK_THROWS_AS(profile(15), std::invalid_argument);
  CHECK_THROWS_AS(sweep(10, 5), std::invalid_argument);
}

TEST_CASE("profiles at 7, 13 and 3") {
  const auto p7 = profile(7);
  CHECK(p7.mersenne);
  CHECK_FALSE(p7.two_rooted);
  CHECK(p7.t1_agree);
  CHECK(p7.t2_agree);
  CHECK(p7.t1_results.size() == 12);
  CHECK(p7.t2_results.size() == 10);
  CHECK(all_verdicts(p7.t1_results, true));
  CHECK(all_verdicts(p7.t2_results, false));
  CHECK(p7.consistent());

  const auto p13 = profile(13);
  CHECK_FALSE(p13.mersenne);
  CHECK(p13.two_rooted);
  CHECK(all_verdicts(p13.t1_results, false));
  CHECK(all_verdicts(p13.t2_results, true));
  CHECK(p13.mod8 == 5);
  CHECK(p13.ord2 == 12);

  const auto p3 = profile(3);
  CHECK(p3.mersenne);
  CHECK(p3.two_rooted);
  CHECK(p3.reduced_t1);
  REQUIRE(p3.t1_results.size() == std::size(kReducedTheorem1Set));
  for (std::size_t i = 0; i < p3.t1_results.size(); ++i) CHECK(p3.t1_results[i].statement_id == kReducedTheorem1Set[i]);
  CHECK(all_verdicts(p3.t1_results, true));
  CHECK(all_verdicts(p3.t2_results, true));
  CHECK(p3.consistent());
}

TEST_CASE("oracle and direct evaluators agree wherever both exist (p <= 13)") {
  for (std::uint64_t p : {5, 7, 11, 13}) {
    const auto with_oracles = profile(p);
    const auto direct = profile(p, EvaluationOptions::direct_only());
    for (std::size_t i = 0; i < with_oracles.t1_results.size(); ++i)
      REQUIRE(with_oracles.t1_results[i].verdict == direct.t1_results[i].verdict);
    for (std::size_t i = 0; i < with_oracles.t2_results.size(); ++i)
      REQUIRE(with_oracles.t2_results[i].verdict == direct.t2_results[i].verdict);
    for (const auto& r : direct.t1_results) REQUIRE(r.kind != EvaluatorKind::Oracle);
    for (const auto& r : direct.t2_results) REQUIRE(r.kind != EvaluatorKind::Oracle);
  }
}

TEST_CASE("sweep examples") {
  const auto small = sweep(5, 31);
  CHECK(small.summary.mersenne == std::vector<std::uint64_t>{7, 31});
  CHECK(small.summary.two_rooted == std::vector<std::uint64_t>{5, 11, 13, 19, 29});
  CHECK(small.summary.prime_count == 9);
  CHECK(small.summary.disagreements.empty());

  const auto three = sweep(3, 3);
  REQUIRE(three.profiles.size() == 1);
  CHECK(three.profiles[0].reduced_t1);
  CHECK(three.profiles[0].mersenne);
  CHECK(three.profiles[0].two_rooted);

  CHECK(sweep(2, 2).profiles.empty());
  CHECK(sweep(24, 28).profiles.empty());
}

TEST_CASE("every prime 3 < p <= 257 agrees, with and without oracles") {
  for (const auto& opts : {EvaluationOptions{}, EvaluationOptions::direct_only()}) {
    const auto result = sweep(5, 257, {opts, 0});
    CHECK(result.summary.disagreements.empty());
    for (const auto& pr : result.profiles) {
      REQUIRE(pr.t1_agree);
      REQUIRE(pr.t2_agree);
      REQUIRE(pr.t1_results.front().verdict == pr.mersenne);
      REQUIRE(pr.t2_results.front().verdict == pr.two_rooted);
    }
  }
}

TEST_CASE("sweep output order does not depend on the number of workers") {
  const auto one = sweep(3, 200, {{}, 1});
  const auto four = sweep(3, 200, {{}, 4});
  REQUIRE(one.profiles.size() == four.profiles.size());
  for (std::size_t i = 0; i < one.profiles.size(); ++i) {
    REQUIRE(one.profiles[i].p == four.profiles[i].p);
    REQUIRE(one.profiles[i].consistent() == four.profiles[i].consistent());
  }
  CHECK(one.summary.two_rooted == four.summary.two_rooted);
}

TEST_CASE("direct statement (1) verdicts over p <= 10^5") {
  const auto direct = EvaluationOptions::direct_only();
  for (auto p : numtheory::primes_in_range(5, 100000)) {
    const bool t1 = t1_statement(p, 1, direct).verdict;
    const bool t2 = t2_statement(p, 1, direct).verdict;
    REQUIRE_FALSE((t1 && t2));
    if (t2) {
      const int r = numtheory::mod8_residue(p);
      REQUIRE((r == 3 || r == 5));
    }
  }
  CHECK(t2_statement(3, 1).verdict);
}
