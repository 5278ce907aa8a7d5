#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "adelic/exactlog/log_value.hpp"
#include "adelic/ffbundles/bundles.hpp"
#include "adelic/lattices/lattice.hpp"
#include "adelic/okounkov/roof.hpp"
#include "adelic/okounkov/series.hpp"

// JSON encoding of every input and output object. Rationals travel as
// strings; plain JSON integers are accepted on input when below 2^53.
// All decoding failures surface as ValidationError.
namespace adelic::io {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "v1";

/// Accepts a missing "schema" or "v1"; anything else is rejected.
void check_schema(const json& j);

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

/// {"p": "c", ...} for sum c ln p.
json to_json(const exactlog::LogValue& v);
exactlog::LogValue log_from_json(const json& j);

/// {"constant": "c", "terms": {...}}.
json to_json(const exactlog::Quantity& q);
/// A rational (string or integer) or an object with "terms" and an optional
/// "constant".
exactlog::Quantity quantity_from_json(const json& j);

json to_json(const IntVector& v);
json to_json(const IntMatrix& m);
json to_json(const RationalVector& v);

/// {"type": "euclidean", "dim": d, "gram": [[...], ...]}
lattices::EuclideanLattice lattice_from_json(const json& j);
json to_json(const lattices::EuclideanLattice& e);

/// {"type": "splitting", "degrees": [...]}
ffbundles::SplittingType splitting_from_json(const json& j);
json to_json(const ffbundles::SplittingType& s);

/// {"type": "matrix_divisor", "field": "GF(7)", "matrix": [["T^2", "0"], ...],
///  "infinity_twist": [...]} (twist defaults to zeros).
ffbundles::MatrixDivisor divisor_from_json(const json& j);
json to_json(const ffbundles::PolyMatrix& m);

/// {"dim": d, "vertices": [[...], ...]}; dim may be omitted when vertices exist.
okounkov::RationalPolytope polytope_from_json(const json& j);
json to_json(const okounkov::RationalPolytope& p);

/// {"domain": polytope, "pieces": [{"gradient": [...], "offset": ...}]};
/// a missing domain means the standard simplex of the gradients' length.
okounkov::RoofFunction roof_from_json(const json& j);
json to_json(const okounkov::RoofFunction& g);

/// {"dim": d, "levels": {"1": [[...], ...], ...}}
okounkov::MonomialSeries series_from_json(const json& j);

/// Kind of input object: the "type" field, or a guess from its keys.
std::string input_kind(const json& j);

std::string read_file(const std::filesystem::path& path);
json parse_json(const std::string& text);
/// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);
std::string sha256_hex(const std::string& bytes);

}  // namespace adelic::io
