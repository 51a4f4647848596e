#pragma once

// Serialized output shared by every CLI subcommand.
//
// A document is a JSON object with the keys, in order:
//   command      subcommand name
//   params       input parameters
//   result       primary result; big integers are decimal strings
//   bounds       closed-form brackets (may be empty)
//   diagnostics  floating-point side information (may be empty)
//   provenance   {"version": ..., "git": ...}

#include "subseq/bigcount.hpp"
#include "subseq/capacity.hpp"
#include "subseq/greedy_recovery.hpp"
#include "subseq/master_census.hpp"
#include "subseq/verify.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace subseq::report {

using Json = nlohmann::ordered_json;

enum class Format { table, json, csv };

Format parse_format(std::string_view name);

std::string version();
std::string git_hash();

Json document(std::string_view command, Json params, Json result, Json bounds = Json::object(),
              Json diagnostics = Json::object());

Json big(const BigCount& value);
Json rational(const Rational& value);

Json census_bounds(const CensusResult& census);
Json masterless_bounds(const MasterlessBounds& bounds);
Json matrix_census(const MatrixCensus& census);
Json capacity(const CapacityReport& report);
Json verify(const VerifyReport& report);

/// One row per (parameter combination, quantity). Columns are the document's
/// params keys followed by "quantity,value".
std::string to_csv(const Json& doc);
std::string to_table(const Json& doc);
std::string render(const Json& doc, Format format);

}  // namespace subseq::report
