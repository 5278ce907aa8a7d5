#include "adelic/harness/report.hpp"

#include <cstdio>
#include <sstream>

#include "adelic/exactlog/compare.hpp"

namespace adelic::harness {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

ReportEntry log_entry(std::string name, const exactlog::LogValue& v, bool certified, json witness, std::optional<long> n) {
  return {std::move(name), n, io::to_json(v), exactlog::to_string(v), exactlog::to_double(v), certified, std::move(witness)};
}

ReportEntry quantity_entry(std::string name, const exactlog::Quantity& q, bool certified, json witness,
                           std::optional<long> n) {
  return {std::move(name), n, io::to_json(q), exactlog::to_string(q), exactlog::to_double(q), certified, std::move(witness)};
}

ReportEntry rational_entry(std::string name, const Rational& r, bool certified, json witness, std::optional<long> n) {
  return {std::move(name), n, io::to_json(r), to_string(r), r.get_d(), certified, std::move(witness)};
}

ReportEntry plain_entry(std::string name, json exact, bool certified, json witness, std::optional<long> n) {
  std::string shown = exact.is_string() ? exact.get<std::string>() : exact.dump();
  return {std::move(name), n, std::move(exact), std::move(shown), std::nullopt, certified, std::move(witness)};
}

bool InvariantReport::all_certified() const {
  for (const auto& e : entries)
    if (!e.certified) return false;
  return true;
}

json to_json(const InvariantReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json j{{"name", e.name}, {"exact", e.exact}, {"display", e.display}, {"certified", e.certified}};
    if (e.n) j["n"] = *e.n;
    if (e.value) j["float"] = *e.value;
    if (!e.witness.is_null()) j["witness"] = e.witness;
    entries.push_back(std::move(j));
  }
  return json{{"schema", io::kSchemaVersion}, {"command", r.command}, {"status", r.status},
              {"provenance", r.provenance}, {"warnings", r.warnings}, {"entries", entries}};
}

std::string to_csv(const InvariantReport& r) {
  std::ostringstream out;
  out << "name,n,value,certified,exact\n";
  for (const auto& e : r.entries) {
    out << csv_field(e.name) << ',' << (e.n ? std::to_string(*e.n) : "") << ',' << (e.value ? format_double(*e.value) : "")
        << ',' << (e.certified ? "true" : "false") << ',' << csv_field(e.display) << '\n';
  }
  return out.str();
}

std::string to_markdown(const InvariantReport& r) {
  std::ostringstream out;
  out << "## " << r.command << " (" << r.status << ")\n\n";
  out << "| name | n | exact | float | certified |\n|---|---|---|---|---|\n";
  for (const auto& e : r.entries) {
    out << "| " << e.name << " | " << (e.n ? std::to_string(*e.n) : "") << " | `" << e.display << "` | "
        << (e.value ? format_double(*e.value) : "") << " | " << (e.certified ? "yes" : "no") << " |\n";
  }
  for (const auto& w : r.warnings) out << "\n> warning: " << w << '\n';
  return out.str();
}

}  // namespace adelic::harness
