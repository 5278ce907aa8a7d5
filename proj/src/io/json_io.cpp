#include "adelic/io/json_io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "adelic/core/errors.hpp"

namespace adelic::io {

namespace {

constexpr long long kMaxExactJsonInteger = 9007199254740992LL;  // 2^53

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

long integer_from_json(const json& j) {
  if (j.is_number_integer()) {
    const long long v = j.get<long long>();
    if (v >= kMaxExactJsonInteger || v <= -kMaxExactJsonInteger) throw ValidationError("integer exceeds 2^53; use a string");
    return static_cast<long>(v);
  }
  if (j.is_string()) {
    const Rational r = parse_rational(j.get<std::string>());
    if (r.get_den() != 1 || !r.get_num().fits_slong_p()) throw ValidationError("expected a machine integer");
    return r.get_num().get_si();
  }
  throw ValidationError("expected an integer");
}

std::vector<RationalVector> points_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("expected an array of points");
  std::vector<RationalVector> pts;
  for (const auto& row : j) {
    if (!row.is_array()) throw ValidationError("expected a point as an array");
    RationalVector p;
    for (const auto& x : row) p.push_back(rational_from_json(x));
    pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace

void check_schema(const json& j) {
  if (!j.is_object()) throw ValidationError("input must be a JSON object");
  if (j.contains("schema") && j.at("schema") != kSchemaVersion) {
    throw ValidationError("unsupported schema version " + j.at("schema").dump());
  }
}

json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  throw ValidationError("rationals must be strings or integers, got " + j.dump());
}

json to_json(const exactlog::LogValue& v) {
  json out = json::object();
  for (const auto& [p, c] : v.terms()) out[p.get_str()] = to_string(c);
  return out;
}

exactlog::LogValue log_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("log values are objects mapping primes to coefficients");
  exactlog::LogValue::Terms terms;
  for (const auto& [key, val] : j.items()) {
    Integer p;
    if (p.set_str(key, 10) != 0) throw ValidationError("log term key is not an integer: " + key);
    terms[p] += rational_from_json(val);
  }
  try {
    return exactlog::LogValue::from_terms(terms);
  } catch (const DomainError& e) {
    throw ValidationError(e.what());
  }
}

json to_json(const exactlog::Quantity& q) {
  return json{{"constant", to_string(q.constant())}, {"terms", to_json(q.log_part())}};
}

exactlog::Quantity quantity_from_json(const json& j) {
  if (!j.is_object()) return exactlog::Quantity(rational_from_json(j));
  const Rational c = j.contains("constant") ? rational_from_json(j.at("constant")) : Rational(0);
  const exactlog::LogValue l = j.contains("terms") ? log_from_json(j.at("terms")) : exactlog::LogValue();
  return exactlog::Quantity(c, l);
}

json to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.fits_slong_p() && abs(x) < Integer(static_cast<long>(kMaxExactJsonInteger)) ? json(x.get_si()) : json(x.get_str()));
  return out;
}

json to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

json to_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

lattices::EuclideanLattice lattice_from_json(const json& j) {
  check_schema(j);
  if (j.contains("type") && j.at("type") != "euclidean") throw ValidationError("expected a euclidean lattice");
  const auto rows = points_from_json(require(j, "gram"));
  const std::size_t d = rows.size();
  if (d == 0) throw ValidationError("gram matrix is empty");
  if (j.contains("dim") && static_cast<std::size_t>(integer_from_json(j.at("dim"))) != d) {
    throw ValidationError("dim does not match the gram matrix");
  }
  RationalMatrix g(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (rows[i].size() != d) throw ValidationError("gram matrix is not square");
    for (std::size_t k = 0; k < d; ++k) g(i, k) = rows[i][k];
  }
  try {
    return lattices::EuclideanLattice(std::move(g));
  } catch (const DomainError& e) {
    throw ValidationError(e.what());
  }
}

json to_json(const lattices::EuclideanLattice& e) {
  json gram = json::array();
  for (std::size_t i = 0; i < e.dim(); ++i) gram.push_back(to_json(e.gram().row(i)));
  return json{{"schema", kSchemaVersion}, {"type", "euclidean"}, {"dim", e.dim()}, {"gram", gram}};
}

ffbundles::SplittingType splitting_from_json(const json& j) {
  check_schema(j);
  const json& deg = require(j, "degrees");
  if (!deg.is_array() || deg.empty()) throw ValidationError("degrees must be a non-empty array");
  std::vector<long> out;
  for (const auto& x : deg) out.push_back(integer_from_json(x));
  return ffbundles::SplittingType(std::move(out));
}

json to_json(const ffbundles::SplittingType& s) {
  return json{{"schema", kSchemaVersion}, {"type", "splitting"}, {"degrees", s.degrees()}};
}

ffbundles::MatrixDivisor divisor_from_json(const json& j) {
  check_schema(j);
  ffbundles::MatrixDivisor m;
  m.field = ffbundles::Field::parse(j.value("field", std::string("Q")));
  const json& rows = require(j, "matrix");
  if (!rows.is_array() || rows.empty()) throw ValidationError("matrix must be a non-empty array");
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != rows.size()) throw ValidationError("matrix must be square");
    std::vector<ffbundles::Polynomial> r;
    for (const auto& entry : row) {
      const std::string text = entry.is_string() ? entry.get<std::string>() : entry.dump();
      r.push_back(ffbundles::Polynomial::parse(text, m.field));
    }
    m.matrix.push_back(std::move(r));
  }
  if (j.contains("infinity_twist")) {
    for (const auto& t : j.at("infinity_twist")) m.infinity_twist.push_back(integer_from_json(t));
    if (m.infinity_twist.size() != rows.size()) throw ValidationError("infinity_twist has the wrong length");
  } else {
    m.infinity_twist.assign(rows.size(), 0);
  }
  return m;
}

json to_json(const ffbundles::PolyMatrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& p : row) r.push_back(p.to_string());
    out.push_back(std::move(r));
  }
  return out;
}

okounkov::RationalPolytope polytope_from_json(const json& j) {
  const auto pts = points_from_json(require(j, "vertices"));
  if (pts.empty()) throw ValidationError("polytope needs at least one vertex");
  const std::size_t d = j.contains("dim") ? static_cast<std::size_t>(integer_from_json(j.at("dim"))) : pts.front().size();
  return okounkov::RationalPolytope::hull(pts, d);
}

json to_json(const okounkov::RationalPolytope& p) {
  json verts = json::array();
  for (const auto& v : p.vertices()) verts.push_back(to_json(v));
  return json{{"dim", p.ambient_dim()}, {"vertices", verts}};
}

okounkov::RoofFunction roof_from_json(const json& j) {
  check_schema(j);
  const json& pieces = require(j, "pieces");
  if (!pieces.is_array() || pieces.empty()) throw ValidationError("roof needs a non-empty pieces array");
  std::vector<okounkov::AffinePiece> out;
  for (const auto& pj : pieces) {
    okounkov::AffinePiece p;
    for (const auto& g : require(pj, "gradient")) p.gradient.push_back(quantity_from_json(g));
    p.offset = pj.contains("offset") ? quantity_from_json(pj.at("offset")) : exactlog::Quantity();
    out.push_back(std::move(p));
  }
  okounkov::RationalPolytope dom = j.contains("domain")
                                       ? polytope_from_json(j.at("domain"))
                                       : okounkov::RationalPolytope::standard_simplex(out.front().gradient.size());
  return okounkov::RoofFunction(std::move(dom), std::move(out));
}

json to_json(const okounkov::RoofFunction& g) {
  json pieces = json::array();
  for (const auto& p : g.pieces()) {
    json grad = json::array();
    for (const auto& x : p.gradient) grad.push_back(x.is_rational() ? to_json(x.constant()) : to_json(x));
    pieces.push_back({{"gradient", grad}, {"offset", p.offset.is_rational() ? to_json(p.offset.constant()) : to_json(p.offset)}});
  }
  return json{{"schema", kSchemaVersion}, {"type", "roof"}, {"domain", to_json(g.domain())}, {"pieces", pieces}};
}

okounkov::MonomialSeries series_from_json(const json& j) {
  check_schema(j);
  okounkov::MonomialSeries s;
  const json& levels = require(j, "levels");
  if (!levels.is_object()) throw ValidationError("levels must map degrees to exponent lists");
  for (const auto& [key, vecs] : levels.items()) {
    const Rational n = parse_rational(key);
    if (n.get_den() != 1 || n < 1 || !n.get_num().fits_uint_p()) throw ValidationError("level keys are positive integers");
    auto& bucket = s.levels[static_cast<unsigned>(n.get_num().get_ui())];
    for (const auto& v : vecs) {
      std::vector<long> nu;
      for (const auto& x : v) nu.push_back(integer_from_json(x));
      bucket.push_back(std::move(nu));
    }
  }
  if (j.contains("dim")) {
    s.dim = static_cast<std::size_t>(integer_from_json(j.at("dim")));
  } else {
    for (const auto& [n, vecs] : s.levels)
      if (!vecs.empty()) s.dim = vecs.front().size();
  }
  return s;
}

std::string input_kind(const json& j) {
  if (!j.is_object()) throw ValidationError("input must be a JSON object");
  if (j.contains("type")) return j.at("type").get<std::string>();
  if (j.contains("gram")) return "euclidean";
  if (j.contains("degrees")) return "splitting";
  if (j.contains("matrix")) return "matrix_divisor";
  if (j.contains("pieces")) return "roof";
  if (j.contains("levels")) return "series";
  throw ValidationError("cannot determine the input type");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw ValidationError("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw InternalError("SHA-256 computation failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return hex.str();
}

}  // namespace adelic::io
