#pragma once

#include <string>

#include <json.hpp>

#include "pathenergy/bounds.hpp"
#include "pathenergy/disjoint_paths.hpp"
#include "pathenergy/explorer.hpp"
#include "pathenergy/spectral.hpp"

namespace pathenergy {

/// Bumped on any breaking change to a payload below.
inline constexpr const char* kSchemaVersion = "1.0";

using Json = nlohmann::json;

void to_json(Json& j, const PathMatrix& pm);
void to_json(Json& j, const Spectrum& s);
void to_json(Json& j, const SignCounts& c);
void to_json(Json& j, const EnergyReport& r);
void to_json(Json& j, const BoundReport& r);
void to_json(Json& j, const ClosedForm& cf);
void to_json(Json& j, const SinglePositiveCheck& c);
void to_json(Json& j, const ScanRecord& r);
void to_json(Json& j, const ScanSummary& s);

/// {schema_version, command, inputs, results}.
Json make_document(const std::string& command, Json inputs, Json results);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double x);

std::string path_matrix_csv(const PathMatrix& pm);
std::string scan_record_csv_header();
std::string scan_record_csv_row(const ScanRecord& r);

}  // namespace pathenergy
