#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adelic/io/json_io.hpp"

namespace adelic::harness {

using io::json;

/// One reported invariant. `exact` is always present; `value` is the float64
/// rendering of the exact value (absent for booleans, strings and integers
/// lists, which need none).
struct ReportEntry {
  std::string name;
  std::optional<long> n;
  json exact;
  std::string display;
  std::optional<double> value;
  bool certified = true;
  json witness;
};

ReportEntry log_entry(std::string name, const exactlog::LogValue& v, bool certified = true, json witness = nullptr,
                      std::optional<long> n = std::nullopt);
ReportEntry quantity_entry(std::string name, const exactlog::Quantity& q, bool certified = true, json witness = nullptr,
                           std::optional<long> n = std::nullopt);
ReportEntry rational_entry(std::string name, const Rational& r, bool certified = true, json witness = nullptr,
                           std::optional<long> n = std::nullopt);
/// Entry without a float column (flags, labels, integer lists).
ReportEntry plain_entry(std::string name, json exact, bool certified = true, json witness = nullptr,
                        std::optional<long> n = std::nullopt);

struct InvariantReport {
  std::string command;
  json provenance = json::object();
  std::vector<ReportEntry> entries;
  std::vector<std::string> warnings;
  /// "ok", "uncertified" or "resource_limit".
  std::string status = "ok";

  void add(ReportEntry e) { entries.push_back(std::move(e)); }
  bool all_certified() const;
};

json to_json(const InvariantReport& r);
/// Columns: name,n,value,certified,exact.
std::string to_csv(const InvariantReport& r);
std::string to_markdown(const InvariantReport& r);

}  // namespace adelic::harness
