#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mersenne::characterize {

/// How a verdict was reached.
///  - Direct: closed form or a single identity check that scales to large p.
///  - Oracle: exhaustive scan over every element / matrix / graph.
///  - Witnessed: the statement quantifies over all groups and fields and is
///    decided through its canonical witness F2[C_p].
enum class EvaluatorKind { Direct, Oracle, Witnessed };

const char* to_string(EvaluatorKind kind);

struct StatementResult {
  int theorem = 0;  ///< 1 (Mersenne) or 2 (2-rooted)
  int statement_id = 0;
  bool verdict = false;
  EvaluatorKind kind = EvaluatorKind::Direct;
  std::string route;  ///< which evaluator produced the verdict
  std::chrono::nanoseconds elapsed{0};
};

struct EvaluationOptions {
  /// Largest p for exhaustive scans over F2[C_p] / circulants (2^p elements).
  std::size_t oracle_cap_p = 13;
  /// Largest p for the pseudopath scan over every odd-matching graph (T1 (11)).
  std::size_t graph_oracle_cap_p = 9;
  /// Largest p for the augmentation-converse scan (T2 (4)).
  std::size_t augmentation_scan_cap_p = 25;

  /// All caps zero: every statement takes its direct route.
  static EvaluationOptions direct_only() { return {0, 0, 0}; }
};

inline constexpr int kTheorem1Statements = 12;
inline constexpr int kTheorem2Statements = 10;
/// The statements of the Mersenne theorem that stay equivalent at p = 3.
inline constexpr int kReducedTheorem1Set[] = {1, 2, 3, 4, 8, 11};

/// Statement k (1..12) of the Mersenne characterization at prime p > 3.
/// Throws std::invalid_argument for p <= 3, composite p, or k out of range.
StatementResult t1_statement(std::uint64_t p, int k, const EvaluationOptions& options = {});

/// Statement k (1..10) of the 2-rooted characterization at odd prime p.
/// Throws std::invalid_argument for p == 2, composite p, or k out of range.
StatementResult t2_statement(std::uint64_t p, int k, const EvaluationOptions& options = {});

struct PrimeProfile {
  std::uint64_t p = 0;
  std::uint64_t ord2 = 0;
  bool mersenne = false;
  bool two_rooted = false;
  int mod8 = 0;
  /// p = 3: only the reduced Mersenne statement set was evaluated.
  bool reduced_t1 = false;
  std::vector<StatementResult> t1_results;
  std::vector<StatementResult> t2_results;
  bool t1_agree = false;
  bool t2_agree = false;

  /// Both agreement flags hold, and mersenne and two_rooted are not both set
  /// unless p == 3.
  [[nodiscard]] bool consistent() const;
};

/// Evaluates every applicable statement at odd prime p.
PrimeProfile profile(std::uint64_t p, const EvaluationOptions& options = {});

struct SweepOptions {
  EvaluationOptions evaluation;
  unsigned jobs = 0;  ///< 0 = available parallelism
};

struct SweepSummary {
  std::size_t prime_count = 0;
  std::vector<std::uint64_t> mersenne;
  std::vector<std::uint64_t> two_rooted;
  std::vector<std::uint64_t> disagreements;  ///< primes whose profile is inconsistent
};

struct SweepResult {
  std::vector<PrimeProfile> profiles;  ///< sorted by p
  SweepSummary summary;
};

/// Profiles for every odd prime in [min, max]. Throws std::invalid_argument
/// when min > max.
SweepResult sweep(std::uint64_t min, std::uint64_t max, const SweepOptions& options = {});

}  // namespace mersenne::characterize
