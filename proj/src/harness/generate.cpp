#include "adelic/harness/generate.hpp"

#include <random>

#include "adelic/core/errors.hpp"

namespace adelic::harness {

namespace {

long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

io::json random_gram(const GenerateParams& p, std::mt19937_64& rng) {
  const std::size_t d = p.dim;
  IntMatrix a(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) a(i, k) = draw(rng, -p.max_abs, p.max_abs);
  RationalMatrix g = to_rational(a * a.transposed());
  for (std::size_t i = 0; i < d; ++i) g(i, i) += p.epsilon;
  io::json j = io::to_json(lattices::EuclideanLattice(std::move(g)));
  j["metadata"] = {{"kind", p.kind}, {"seed", p.seed}, {"epsilon", to_string(p.epsilon)}};
  return j;
}

io::json random_splitting(const GenerateParams& p, std::mt19937_64& rng) {
  std::vector<long> deg;
  for (std::size_t i = 0; i < p.dim; ++i) deg.push_back(draw(rng, -p.max_abs, p.max_abs));
  const ffbundles::SplittingType s(deg);
  io::json j = io::to_json(s);
  j["metadata"] = {{"kind", p.kind}, {"seed", p.seed}, {"total_degree", s.total_degree()}};
  return j;
}

Rational small_rational(std::mt19937_64& rng, long max_abs) {
  const long num = draw(rng, -max_abs, max_abs);
  const long den = draw(rng, 1, 2);
  return make_rational(num, den);
}

io::json random_roof(const GenerateParams& p, std::mt19937_64& rng) {
  const long count = draw(rng, 1, 3);
  io::json pieces = io::json::array();
  for (long k = 0; k < count; ++k) {
    io::json grad = io::json::array();
    for (std::size_t i = 0; i < p.dim; ++i) grad.push_back(to_string(small_rational(rng, p.max_abs)));
    pieces.push_back({{"gradient", grad}, {"offset", to_string(small_rational(rng, p.max_abs))}});
  }
  io::json verts = io::json::array();
  const okounkov::RationalPolytope simplex = okounkov::RationalPolytope::standard_simplex(p.dim);
  for (const auto& v : simplex.vertices()) verts.push_back(io::to_json(v));
  return io::json{{"schema", io::kSchemaVersion},
                  {"type", "roof"},
                  {"domain", {{"dim", p.dim}, {"vertices", verts}}},
                  {"pieces", pieces},
                  {"metadata", {{"kind", p.kind}, {"seed", p.seed}}}};
}

}  // namespace

io::json generate(const GenerateParams& p) {
  if (p.dim == 0 || p.dim > 16) throw ValidationError("generate: dim must be in 1..16");
  if (p.max_abs < 0 || p.max_abs > 1000000) throw ValidationError("generate: max-abs must be in 0..10^6");
  if (p.epsilon <= 0) throw ValidationError("generate: epsilon must be positive");
  std::mt19937_64 rng(p.seed);
  if (p.kind == "random-gram") return random_gram(p, rng);
  if (p.kind == "random-splitting") return random_splitting(p, rng);
  if (p.kind == "random-roof") return random_roof(p, rng);
  throw ValidationError("generate: unknown kind '" + p.kind + "'");
}

}  // namespace adelic::harness
