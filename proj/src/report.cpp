#include "mersenne/report.hpp"

#include <sstream>

#include "mersenne/bigraph.hpp"
#include "mersenne/numtheory.hpp"

namespace mersenne::report {

namespace {

std::string big(const BigInt& v) { return v.str(); }

json statement_list(const std::vector<characterize::StatementResult>& rs, bool timing) {
  json out = json::array();
  for (const auto& r : rs) out.push_back(to_json(r, timing));
  return out;
}

bool first_verdict(const std::vector<characterize::StatementResult>& rs) {
  return !rs.empty() && rs.front().verdict;
}

}  // namespace

json element_json(const galgebra::GroupAlgebraElement& a) {
  return {{"bits", a.to_bitstring()}, {"hex", a.to_hex()}};
}

json polynomial_json(const BinaryPolynomial& f) {
  return {{"bits", f.to_bitstring(static_cast<std::size_t>(f.degree() + 1))},
          {"hex", f.to_hex()},
          {"degree", f.degree()}};
}

json to_json(const characterize::StatementResult& r, bool timing) {
  json out = {{"theorem", r.theorem},
              {"statement", r.statement_id},
              {"verdict", r.verdict},
              {"evaluator", characterize::to_string(r.kind)},
              {"route", r.route}};
  if (timing) out["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
  return out;
}

json to_json(const characterize::PrimeProfile& pr, bool timing) {
  return {{"p", pr.p},
          {"ord2", pr.ord2},
          {"mod8", pr.mod8},
          {"mersenne", pr.mersenne},
          {"two_rooted", pr.two_rooted},
          {"reduced_t1", pr.reduced_t1},
          {"t1_agree", pr.t1_agree},
          {"t2_agree", pr.t2_agree},
          {"consistent", pr.consistent()},
          {"t1", statement_list(pr.t1_results, timing)},
          {"t2", statement_list(pr.t2_results, timing)}};
}

json to_json(const characterize::SweepSummary& s) {
  return {{"prime_count", s.prime_count},
          {"mersenne", s.mersenne},
          {"two_rooted", s.two_rooted},
          {"disagreement_count", s.disagreements.size()},
          {"disagreements", s.disagreements}};
}

json to_json(const cyclotomic::Factorization& f) {
  json factors = json::array();
  for (const auto& g : f.factors) factors.push_back(polynomial_json(g));
  return {{"p", f.p},
          {"ord2", numtheory::mult_order(2, f.p)},
          {"factor_count", f.factors.size()},
          {"degrees", f.degrees()},
          {"factors", factors},
          {"verified", cyclotomic::verify_factor_profile(f)}};
}

std::string csv_header() {
  return "p,ord2,mod8,mersenne,two_rooted,reduced_t1,t1_verdict,t2_verdict,t1_agree,t2_agree,consistent";
}

std::string csv_row(const characterize::PrimeProfile& pr) {
  std::ostringstream os;
  os << pr.p << ',' << pr.ord2 << ',' << pr.mod8 << ',' << int{pr.mersenne} << ','
     << int{pr.two_rooted} << ',' << int{pr.reduced_t1} << ',' << int{first_verdict(pr.t1_results)}
     << ',' << int{first_verdict(pr.t2_results)} << ',' << int{pr.t1_agree} << ','
     << int{pr.t2_agree} << ',' << int{pr.consistent()};
  return os.str();
}

std::string to_csv(const characterize::SweepResult& sweep) {
  std::string out = csv_header() + "\n";
  for (const auto& pr : sweep.profiles) out += csv_row(pr) + "\n";
  return out;
}

json units_payload(std::uint64_t p, std::size_t oracle_cap) {
  const auto ord = numtheory::mult_order(2, p);
  json out = {{"p", p},
              {"ord2", ord},
              {"unit_count", big(galgebra::unit_count(p))},
              {"order_p_unit_count", big(galgebra::order_p_unit_count(p))},
              {"element_count", big(BigInt{1} << p)}};
  if (p <= oracle_cap) {
    const auto units = galgebra::enumerate_units(p, oracle_cap);
    std::uint64_t order_p = 0;
    for (const auto& u : units) order_p += galgebra::has_order_exactly_p(u) ? 1 : 0;
    const bool agrees = BigInt{units.size()} == galgebra::unit_count(p) &&
                        BigInt{order_p} == galgebra::order_p_unit_count(p);
    out["oracle"] = {{"unit_count", std::to_string(units.size())},
                     {"order_p_unit_count", std::to_string(order_p)},
                     {"agrees", agrees}};
  } else {
    out["oracle"] = nullptr;
  }
  return out;
}

json matchings_payload(std::uint64_t p, const std::string& column) {
  const auto g = bigraph::BipartiteCirculantGraph::from_column(column, p);
  const auto dense = g.biadjacency().to_dense();
  json out = {{"p", p},
              {"column", element_json(g.biadjacency().first_column())},
              {"degree", bigraph::degree(g)},
              {"matching_parity", bigraph::matching_parity(g)},
              {"pseudopath_parity_is_delta", bigraph::pseudopath_parity(g, p).is_kronecker_delta()}};
  out["permanent_parity"] =
      p <= bigraph::kPermanentParityMaxN ? json(bigraph::permanent_parity(dense)) : json(nullptr);
  out["exact_permanent"] =
      p <= bigraph::kRyserMaxN ? json(big(bigraph::exact_permanent(dense))) : json(nullptr);
  return out;
}

json delta_payload(unsigned q, const delta::GroupShape& group, std::uint64_t d,
                   const delta::DeltaOptions& options) {
  const delta::SmallGroupAlgebra algebra(q, group);
  const bool verdict = delta::is_delta_n_ring(q, group, d, options);
  const bool strict = verdict && delta::is_strict_delta_n(q, group, d, options);
  return {{"field", q},
          {"group", group.to_string()},
          {"delta", d},
          {"element_count", algebra.element_count()},
          {"verdict", verdict},
          {"strict", strict}};
}

json envelope(const std::string& command, json parameters, json results,
              std::optional<double> elapsed_ms) {
  json out = {{"schema", kSchemaId},
              {"tool", {{"name", kToolName}, {"version", MERSENNE_VERSION}}},
              {"command", command},
              {"parameters", std::move(parameters)},
              {"results", std::move(results)}};
  if (elapsed_ms) out["timing"] = {{"elapsed_ms", *elapsed_ms}};
  return out;
}

}  // namespace mersenne::report
