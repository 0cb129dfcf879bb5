#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "mersenne/characterize.hpp"
#include "mersenne/cyclotomic.hpp"
#include "mersenne/delta_rings.hpp"
#include "mersenne/group_algebra.hpp"

namespace mersenne::report {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaId = "mersenne-characterizations/report/v1";
inline constexpr const char* kToolName = "mersenne-cli";

/// {"bits": little-endian bitstring, "hex": "0x..."}
json element_json(const galgebra::GroupAlgebraElement& a);
json polynomial_json(const BinaryPolynomial& f);

json to_json(const characterize::StatementResult& r, bool timing);
json to_json(const characterize::PrimeProfile& pr, bool timing);
json to_json(const characterize::SweepSummary& s);
json to_json(const cyclotomic::Factorization& f);

std::string csv_header();
std::string csv_row(const characterize::PrimeProfile& pr);
/// Header plus one line per profile.
std::string to_csv(const characterize::SweepResult& sweep);

/// Unit counts of F2[C_p]: closed forms always, enumeration when p <= oracle_cap.
json units_payload(std::uint64_t p, std::size_t oracle_cap);

/// Matching data for the circulant bipartite graph with first column `column`.
json matchings_payload(std::uint64_t p, const std::string& column);

json delta_payload(unsigned q, const delta::GroupShape& group, std::uint64_t delta,
                   const delta::DeltaOptions& options);

/// The schema-versioned wrapper every CLI report shares. Timing is omitted
/// when elapsed_ms is empty.
json envelope(const std::string& command, json parameters, json results,
              std::optional<double> elapsed_ms);

}  // namespace mersenne::report
