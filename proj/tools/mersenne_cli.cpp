// mersenne-cli: command-line front end for the characterization library.
//
// Exit codes: 0 success, 1 usage error or exceeded budget, 2 a statement
// disagreement (an implementation defect).

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mersenne/characterize.hpp"
#include "mersenne/cyclotomic.hpp"
#include "mersenne/delta_rings.hpp"
#include "mersenne/errors.hpp"
#include "mersenne/numtheory.hpp"
#include "mersenne/parallel.hpp"
#include "mersenne/report.hpp"

namespace {

using namespace mersenne;
using report::json;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDisagreement = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename T>
T env_or(const char* name, T fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used);
    if (used != std::string(raw).size()) throw std::invalid_argument(raw);
    return static_cast<T>(v);
  } catch (const std::exception&) {
    throw UsageError(std::string("environment variable ") + name + " is not a non-negative integer: " + raw);
  }
}

void require_odd_prime(std::uint64_t p) {
  if (p < 3 || !numtheory::is_prime(p)) throw UsageError(std::to_string(p) + " is not an odd prime");
}

struct Common {
  bool deterministic = false;
  int indent = 2;
  Clock::time_point start = Clock::now();

  [[nodiscard]] std::optional<double> elapsed() const {
    if (deterministic) return std::nullopt;
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  }
  void emit(const json& j) const { std::cout << j.dump(indent) << '\n'; }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mersenne and 2-rooted prime characterizations over F2[C_p]"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(report::kToolName) + " " + MERSENNE_VERSION);

  Common common;
  app.add_flag("--deterministic", common.deterministic, "Omit wall-clock timing so reports are byte-identical");
  app.add_option("--indent", common.indent, "JSON indentation; -1 for a single line");

  std::size_t oracle_cap = galgebra::kDefaultEnumerationMaxP;
  std::uint64_t delta_budget = delta::kDefaultBudget;

  std::uint64_t p = 0;
  auto* classify = app.add_subcommand("classify", "Evaluate every statement at one odd prime");
  classify->add_option("p", p, "Odd prime")->required();
  classify->add_option("--oracle-cap", oracle_cap, "Largest p for exhaustive oracles (env ORACLE_CAP_P)");

  std::uint64_t min = 3, max = 100;
  unsigned jobs = 0;
  std::string format = "json";
  auto* sweep = app.add_subcommand("sweep", "Profile every odd prime in [min, max]");
  sweep->add_option("--min", min, "Lower bound")->capture_default_str();
  sweep->add_option("--max", max, "Upper bound")->capture_default_str();
  sweep->add_option("--jobs", jobs, "Worker threads; 0 = available parallelism");
  sweep->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sweep->add_option("--oracle-cap", oracle_cap, "Largest p for exhaustive oracles (env ORACLE_CAP_P)");

  std::uint64_t seed = 0;
  std::uint64_t factor_max_p = cyclotomic::kDefaultMaxP;
  auto* factor = app.add_subcommand("factor", "Factor x^p + 1 over GF(2)");
  factor->add_option("p", p, "Odd prime")->required();
  factor->add_option("--seed", seed, "Seed for equal-degree splitting")->capture_default_str();
  factor->add_option("--max-p", factor_max_p, "Largest p allowed")->capture_default_str();

  auto* units = app.add_subcommand("units", "Unit counts of F2[C_p]");
  units->add_option("p", p, "Odd prime")->required();
  units->add_option("--oracle-cap", oracle_cap, "Largest p for enumeration (env ORACLE_CAP_P)");

  std::string column;
  auto* matchings = app.add_subcommand("matchings", "Perfect matchings of a circulant bipartite graph");
  matchings->add_option("p", p, "Side length")->required();
  matchings->add_option("--column", column, "First column, little-endian bits (\"111\" = 1+x+x^2)")->required();

  unsigned field = 2;
  std::string group_text = "C2";
  std::uint64_t delta_n = 2;
  std::string strategy_text = "auto";
  auto* delta_cmd = app.add_subcommand("delta", "Decide whether F_q[G] is a Delta_n ring");
  delta_cmd->add_option("--field", field, "Field size q (prime power <= 256)")->required();
  delta_cmd->add_option("--group", group_text, "Group shape: C7, C2^3, trivial")->required();
  delta_cmd->add_option("--delta", delta_n, "Exponent n")->required();
  delta_cmd->add_option("--budget", delta_budget, "Element budget (env DELTA_BUDGET)");
  delta_cmd->add_option("--strategy", strategy_text, "auto, gcd, search or regular")
      ->check(CLI::IsMember({"auto", "gcd", "search", "regular"}));

  try {
    oracle_cap = env_or<std::size_t>("ORACLE_CAP_P", oracle_cap);
    delta_budget = env_or<std::uint64_t>("DELTA_BUDGET", delta_budget);
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  characterize::EvaluationOptions eval;
  eval.oracle_cap_p = oracle_cap;
  eval.graph_oracle_cap_p = std::min<std::size_t>(eval.graph_oracle_cap_p, oracle_cap);

  try {
    if (*classify) {
      require_odd_prime(p);
      const auto pr = characterize::profile(p, eval);
      common.emit(report::envelope("classify", {{"p", p}, {"oracle_cap", oracle_cap}},
                                   report::to_json(pr, !common.deterministic), common.elapsed()));
      return pr.consistent() ? kExitOk : kExitDisagreement;
    }
    if (*sweep) {
      if (min > max) throw UsageError("--min must not exceed --max");
      const auto result = characterize::sweep(min, max, {eval, jobs});
      const bool clean = result.summary.disagreements.empty();
      if (format == "csv") {
        std::cout << report::to_csv(result);
        std::cerr << "primes: " << result.summary.prime_count
                  << "  mersenne: " << result.summary.mersenne.size()
                  << "  two_rooted: " << result.summary.two_rooted.size()
                  << "  disagreements: " << result.summary.disagreements.size() << '\n';
      } else {
        json profiles = json::array();
        for (const auto& pr : result.profiles) profiles.push_back(report::to_json(pr, !common.deterministic));
        json params = {{"min", min}, {"max", max}, {"oracle_cap", oracle_cap}};
        if (!common.deterministic) params["jobs"] = jobs == 0 ? default_jobs() : jobs;
        common.emit(report::envelope("sweep", params,
                                     {{"summary", report::to_json(result.summary)}, {"profiles", profiles}},
                                     common.elapsed()));
      }
      if (!clean) {
        std::cerr << "fatal: statement disagreement at p =";
        for (auto q : result.summary.disagreements) std::cerr << ' ' << q;
        std::cerr << '\n';
      }
      return clean ? kExitOk : kExitDisagreement;
    }
    if (*factor) {
      require_odd_prime(p);
      const auto f = cyclotomic::factor_x_p_minus_1(p, seed, factor_max_p);
      common.emit(report::envelope("factor", {{"p", p}, {"seed", seed}, {"max_p", factor_max_p}},
                                   report::to_json(f), common.elapsed()));
      return kExitOk;
    }
    if (*units) {
      require_odd_prime(p);
      common.emit(report::envelope("units", {{"p", p}, {"oracle_cap", oracle_cap}},
                                   report::units_payload(p, oracle_cap), common.elapsed()));
      return kExitOk;
    }
    if (*matchings) {
      if (p == 0) throw UsageError("side length must be positive");
      common.emit(report::envelope("matchings", {{"p", p}, {"column", column}},
                                   report::matchings_payload(p, column), common.elapsed()));
      return kExitOk;
    }
    if (*delta_cmd) {
      static const std::map<std::string, delta::UnitStrategy> strategies = {
          {"auto", delta::UnitStrategy::Auto},
          {"gcd", delta::UnitStrategy::GroupAlgebraGcd},
          {"search", delta::UnitStrategy::InverseSearch},
          {"regular", delta::UnitStrategy::RegularRepresentation}};
      const auto shape = delta::parse_group_shape(group_text);
      const delta::DeltaOptions options{delta_budget, strategies.at(strategy_text)};
      common.emit(report::envelope(
          "delta",
          {{"field", field}, {"group", shape.to_string()}, {"delta", delta_n}, {"budget", delta_budget},
           {"strategy", strategy_text}},
          report::delta_payload(field, shape, delta_n, options), common.elapsed()));
      return kExitOk;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
