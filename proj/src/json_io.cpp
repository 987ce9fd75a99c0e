#include "pathenergy/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace pathenergy {

void to_json(Json& j, const PathMatrix& pm) { j = pm.rows(); }

void to_json(Json& j, const Spectrum& s) { j = Json{{"values", s.values}, {"tol", s.tol}}; }

void to_json(Json& j, const SignCounts& c) {
  j = Json{{"positive", c.positive}, {"zero", c.zero}, {"negative", c.negative}};
}

void to_json(Json& j, const EnergyReport& r) {
  j = Json{{"path_energy", r.path_energy},
           {"graph_energy", r.graph_energy},
           {"path_spectral_radius", r.path_spectral_radius},
           {"positive_count", r.positive_count},
           {"negative_count", r.negative_count},
           {"zero_count", r.zero_count}};
}

void to_json(Json& j, const BoundReport& r) {
  j = Json{{"bound_id", bound_name(r.bound_id)},
           {"lhs", r.lhs},
           {"rhs", r.rhs},
           {"slack", r.slack},
           {"holds", r.holds},
           {"tight", r.tight}};
}

void to_json(Json& j, const ClosedForm& cf) {
  Json spectrum = Json::array();
  for (const auto& e : cf.spectrum) spectrum.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
  j = Json{{"family", family_name(cf.family)},
           {"params", cf.params},
           {"spectrum", spectrum},
           {"path_energy", cf.path_energy},
           {"requires_uniform_entries", cf.requires_uniform_entries}};
  if (cf.requires_uniform_entries) j["uniform_entry"] = cf.uniform_entry;
}

void to_json(Json& j, const SinglePositiveCheck& c) {
  j = Json{{"holds_precondition", c.holds_precondition},
           {"pe_equals_2rho", c.pe_equals_2rho},
           {"positive_is_radius", c.positive_is_radius},
           {"path_energy", c.path_energy},
           {"spectral_radius", c.spectral_radius},
           {"signs", c.signs}};
}

void to_json(Json& j, const ScanRecord& r) {
  j = Json{{"line", r.line},
           {"graph6", r.graph6},
           {"n", r.n},
           {"m", r.m},
           {"connected", r.connected},
           {"biconnected", r.biconnected},
           {"unicyclic", r.unicyclic},
           {"girth", r.girth},
           {"positive_count", r.positive_count},
           {"zero_count", r.zero_count},
           {"negative_count", r.negative_count},
           {"block_count", r.block_count},
           {"nontrivial_block_count", r.nontrivial_block_count},
           {"pe", r.pe},
           {"spectral_radius", r.spectral_radius},
           {"spectrum", r.spectrum},
           {"needs_review", r.needs_review},
           {"conjecture1_applicable", r.conjecture1_applicable},
           {"conjecture1_holds", r.conjecture1_holds},
           {"conjecture1_counterexample", r.conjecture1_counterexample},
           {"conjecture2_match_all_blocks", r.conjecture2_match_all_blocks},
           {"conjecture2_match_nontrivial_blocks", r.conjecture2_match_nontrivial_blocks},
           {"single_positive_checked", r.single_positive_checked},
           {"single_positive_identity_ok", r.single_positive_identity_ok},
           {"bounds_ok", r.bounds_ok},
           {"violated_bounds", r.violated_bounds}};
}

namespace {

Json histogram(const std::map<int, long>& counts) {
  Json out = Json::object();
  for (const auto& [key, count] : counts) out[std::to_string(key)] = count;
  return out;
}

Json nested_histogram(const std::map<int, std::map<int, long>>& table) {
  Json out = Json::object();
  for (const auto& [key, inner] : table) out[std::to_string(key)] = histogram(inner);
  return out;
}

Json agreement(const AgreementCount& a) {
  const long total = a.match + a.mismatch;
  return Json{{"match", a.match},
              {"mismatch", a.mismatch},
              {"rate", total > 0 ? static_cast<double>(a.match) / total : 0.0}};
}

}  // namespace

void to_json(Json& j, const ScanSummary& s) {
  Json errors = Json::array();
  for (const auto& e : s.parse_errors) errors.push_back({{"line", e.line}, {"message", e.message}});

  Json strata = Json::array();
  for (const auto& [key, counts] : s.strata) {
    const auto& [n, bic, uni] = key;
    long total = 0;
    for (const auto& [pos, c] : counts) total += c;
    strata.push_back(
        {{"n", n}, {"biconnected", bic}, {"unicyclic", uni}, {"graphs", total}, {"positive_counts", histogram(counts)}});
  }

  Json witnesses = Json::object();
  for (const auto& [girth, list] : s.unicyclic_two_positive) witnesses[std::to_string(girth)] = list;

  j = Json{
      {"total", s.total},
      {"lines_read", s.lines_read},
      {"skipped_oversize", s.skipped_oversize},
      {"parse_errors", errors},
      {"conjecture1",
       {{"applicable", s.conjecture1_applicable},
        {"holds", s.conjecture1_holds},
        {"agreement_rate", s.conjecture1_applicable > 0
                               ? static_cast<double>(s.conjecture1_holds) / s.conjecture1_applicable
                               : 0.0},
        {"counterexamples", s.conjecture1_counterexamples}}},
      {"needs_review", s.needs_review},
      {"conjecture2",
       {{"all_blocks", agreement(s.conjecture2_all_blocks)},
        {"nontrivial_blocks", agreement(s.conjecture2_nontrivial_blocks)},
        {"positive_by_block_count", nested_histogram(s.positive_by_block_count)},
        {"positive_by_nontrivial_block_count", nested_histogram(s.positive_by_nontrivial_block_count)}}},
      {"strata", strata},
      {"unicyclic",
       {{"positive_by_girth", nested_histogram(s.unicyclic_by_girth)}, {"two_positive_witnesses", witnesses}}},
      {"single_positive_identity",
       {{"checked", s.single_positive_checked}, {"failures", s.single_positive_failures}}},
      {"bound_violations", s.bound_violations},
  };
}

Json make_document(const std::string& command, Json inputs, Json results) {
  return Json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"inputs", std::move(inputs)},
              {"results", std::move(results)}};
}

std::string format_double(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[32];
  for (int precision = 12; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

std::string path_matrix_csv(const PathMatrix& pm) {
  std::ostringstream out;
  for (int i = 0; i < pm.order(); ++i) {
    for (int j = 0; j < pm.order(); ++j) out << (j ? "," : "") << pm.at(i, j);
    out << '\n';
  }
  return out.str();
}

std::string scan_record_csv_header() {
  return "line,graph6,n,m,connected,biconnected,unicyclic,girth,positive_count,zero_count,negative_count,"
         "block_count,nontrivial_block_count,pe,spectral_radius,needs_review,conjecture1_applicable,"
         "conjecture1_holds,conjecture1_counterexample,conjecture2_match_all_blocks,"
         "conjecture2_match_nontrivial_blocks,single_positive_identity_ok,bounds_ok";
}

std::string scan_record_csv_row(const ScanRecord& r) {
  std::ostringstream out;
  // graph6 uses characters 63..126, which never include ',' or '"'.
  out << r.line << ',' << r.graph6 << ',' << r.n << ',' << r.m << ',' << r.connected << ',' << r.biconnected << ','
      << r.unicyclic << ',' << r.girth << ',' << r.positive_count << ',' << r.zero_count << ',' << r.negative_count
      << ',' << r.block_count << ',' << r.nontrivial_block_count << ',' << format_double(r.pe) << ','
      << format_double(r.spectral_radius) << ',' << r.needs_review << ',' << r.conjecture1_applicable << ','
      << r.conjecture1_holds << ',' << r.conjecture1_counterexample << ',' << r.conjecture2_match_all_blocks << ','
      << r.conjecture2_match_nontrivial_blocks << ',' << r.single_positive_identity_ok << ',' << r.bounds_ok;
  return out.str();
}

}  // namespace pathenergy
