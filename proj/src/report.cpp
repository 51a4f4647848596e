#include "subseq/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <vector>

#ifndef SUBSEQ_VERSION
#define SUBSEQ_VERSION "0.0.0"
#endif
#ifndef SUBSEQ_GIT_HASH
#define SUBSEQ_GIT_HASH "unknown"
#endif

namespace subseq::report {

Format parse_format(std::string_view name) {
  if (name == "table") return Format::table;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string version() { return SUBSEQ_VERSION; }
std::string git_hash() { return SUBSEQ_GIT_HASH; }

Json document(std::string_view command, Json params, Json result, Json bounds, Json diagnostics) {
  Json doc = Json::object();
  doc["command"] = std::string(command);
  doc["params"] = std::move(params);
  doc["result"] = std::move(result);
  doc["bounds"] = std::move(bounds);
  doc["diagnostics"] = std::move(diagnostics);
  doc["provenance"] = Json{{"version", version()}, {"git", git_hash()}};
  return doc;
}

Json big(const BigCount& value) { return to_decimal(value); }
Json rational(const Rational& value) { return to_string(value); }

Json census_bounds(const CensusResult& census) {
  Json out = Json::object();
  out["upper"] = big(census.upper);
  Json lowers = Json::object();
  for (const auto& [p, v] : census.lowers) lowers[std::to_string(p)] = big(v);
  out["lowers"] = std::move(lowers);
  if (!census.extra_lowers.empty()) {
    Json extra = Json::object();
    for (const auto& [name, v] : census.extra_lowers) extra[name] = big(v);
    out["extra_lowers"] = std::move(extra);
  }
  if (census.exact) out["bracketed"] = census.bracketed();
  return out;
}

Json masterless_bounds(const MasterlessBounds& bounds) {
  Json out = Json::object();
  out["set_upper"] = big(bounds.set_upper);
  Json tuple = Json::object(), set = Json::object(), floor = Json::object();
  for (const auto& [p, v] : bounds.tuple_lowers) tuple[std::to_string(p)] = rational(v);
  for (const auto& [p, v] : bounds.set_lowers) set[std::to_string(p)] = rational(v);
  for (const auto& [p, v] : bounds.set_lowers_floor) floor[std::to_string(p)] = big(v);
  out["tuple_lowers"] = std::move(tuple);
  out["set_lowers"] = std::move(set);
  out["set_lowers_floor"] = std::move(floor);
  return out;
}

Json matrix_census(const MatrixCensus& c) {
  return Json{{"exact_valid", big(c.exact_valid)},
              {"bound_lower", rational(c.bound_lower)},
              {"ef", rational(c.ef)},
              {"eg", rational(c.eg)},
              {"efg", rational(c.efg)},
              {"fkg_holds", c.efg >= c.ef * c.eg},
              {"column_count", big(c.column_count)}};
}

Json capacity(const CapacityReport& r) {
  Json out = Json::object();
  const double t = static_cast<double>(r.params.t);
  const double n = static_cast<double>(r.params.n);
  out["upper_bits"] = r.upper_bits;
  Json lowers = Json::object();
  for (const auto& [p, bits] : r.lower_bits_by_p) lowers[std::to_string(p)] = bits;
  out["lower_bits_by_p"] = std::move(lowers);
  out["best_p"] = r.best_p;
  out["best_lower_bits"] = r.lower_bits_by_p.at(r.best_p);
  if (r.exact_bits) {
    out["exact"] = big(*r.exact);
    out["exact_bits"] = *r.exact_bits;
  }
  // Total bits plus per-strand and per-time-step normalisations.
  Json norm = Json::object();
  norm["upper_bits_per_strand"] = r.upper_bits / n;
  if (t > 0) norm["upper_bits_per_step"] = r.upper_bits / t;
  norm["best_lower_bits_per_strand"] = r.lower_bits_by_p.at(r.best_p) / n;
  if (t > 0) norm["best_lower_bits_per_step"] = r.lower_bits_by_p.at(r.best_p) / t;
  out["normalized"] = std::move(norm);
  if (r.set_upper_bits) {
    Json sets = Json::object();
    sets["upper_bits"] = *r.set_upper_bits;
    Json sl = Json::object();
    for (const auto& [p, bits] : r.set_lower_bits_by_p) sl[std::to_string(p)] = bits;
    sets["lower_bits_by_p"] = std::move(sl);
    out["unordered_sets"] = std::move(sets);
  }
  return out;
}

Json verify(const VerifyReport& report) {
  Json criteria = Json::array();
  for (const auto& o : report.outcomes) {
    criteria.push_back(Json{{"id", o.id},
                            {"name", o.name},
                            {"passed", o.passed},
                            {"seconds", o.seconds},
                            {"time_limit", o.time_limit},
                            {"detail", o.detail}});
  }
  return Json{{"all_passed", report.all_passed()}, {"criteria", std::move(criteria)}};
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const Json& node, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) flatten(value, path.empty() ? key : path + "." + key, out);
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], path + "." + std::to_string(i), out);
  } else {
    out.emplace_back(path, scalar_text(node));
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::vector<std::pair<std::string, std::string>> quantities(const Json& doc) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (const char* section : {"result", "bounds", "diagnostics"})
    if (doc.contains(section)) flatten(doc.at(section), section, rows);
  return rows;
}

}  // namespace

std::string to_csv(const Json& doc) {
  std::ostringstream os;
  std::vector<std::string> param_values;
  for (const auto& [key, value] : doc.at("params").items()) {
    os << csv_field(key) << ',';
    param_values.push_back(csv_field(scalar_text(value)));
  }
  os << "quantity,value\n";
  for (const auto& [quantity, value] : quantities(doc)) {
    for (const auto& p : param_values) os << p << ',';
    os << csv_field(quantity) << ',' << csv_field(value) << '\n';
  }
  return os.str();
}

std::string to_table(const Json& doc) {
  std::ostringstream os;
  os << doc.at("command").get<std::string>();
  for (const auto& [key, value] : doc.at("params").items()) os << "  " << key << '=' << scalar_text(value);
  os << '\n';
  const auto rows = quantities(doc);
  std::size_t width = 0;
  for (const auto& [q, v] : rows) width = std::max(width, q.size());
  for (const auto& [q, v] : rows) os << "  " << std::left << std::setw(static_cast<int>(width)) << q << "  " << v << '\n';
  return os.str();
}

std::string render(const Json& doc, Format format) {
  switch (format) {
    case Format::json:
      return doc.dump(2) + "\n";
    case Format::csv:
      return to_csv(doc);
    case Format::table:
      break;
  }
  return to_table(doc);
}

}  // namespace subseq::report
