#include "adelic/lattices/minima.hpp"

#include <string>

#include "adelic/core/errors.hpp"
#include "adelic/lattices/enumeration.hpp"
#include "adelic/lattices/integer_linalg.hpp"
#include "adelic/lattices/lll.hpp"

namespace adelic::lattices {

namespace {

Integer l1_norm(const IntVector& v) {
  Integer s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

// True when a should be preferred over b as a minimum witness.
bool better_witness(const ShortVector& a, const ShortVector& b) {
  if (a.norm != b.norm) return a.norm < b.norm;
  const Integer la = l1_norm(a.coords), lb = l1_norm(b.coords);
  if (la != lb) return la < lb;
  return b.coords < a.coords;
}

bool independent_of(const IntMatrix& chosen, const IntVector& v) {
  return integer_rank(append_row(chosen, v)) == chosen.rows() + 1;
}

std::string partial_bounds(const MinimaProfile& p) {
  std::string s = "found " + std::to_string(p.values.size()) + " minima:";
  for (const auto& n : p.squared_norms) s += " " + to_string(n);
  return s;
}

}  // namespace

MinimaProfile successive_minima(const EuclideanLattice& e, const SearchLimits& limits) {
  const std::size_t d = e.dim();
  if (d > limits.dimension_cap) {
    throw ResourceError("dimension " + std::to_string(d) + " exceeds cap " + std::to_string(limits.dimension_cap));
  }
  const LllResult red = lll_reduce(e.gram());
  MinimaProfile out;
  IntMatrix chosen(0, d);
  for (std::size_t i = 0; i < d; ++i) {
    // Some reduced basis vector lies outside the current span; the shortest
    // such one bounds the next minimum.
    Rational radius = -1;
    for (std::size_t k = 0; k < d; ++k) {
      const IntVector bk = red.transform.row(k);
      if (!independent_of(chosen, bk)) continue;
      if (radius < 0 || red.gram(k, k) < radius) radius = red.gram(k, k);
    }
    std::vector<ShortVector> cands;
    try {
      cands = short_vectors(e.gram(), radius, limits.node_budget);
    } catch (const ResourceError& err) {
      throw ResourceError(err.what(), partial_bounds(out) + "; next minimum squared <= " + to_string(radius));
    }
    const ShortVector* best = nullptr;
    for (const auto& c : cands) {
      if (best != nullptr && !better_witness(c, *best)) continue;
      if (!independent_of(chosen, c.coords)) continue;
      best = &c;
    }
    if (best == nullptr) throw InternalError("no independent vector within the bounding radius");
    out.squared_norms.push_back(best->norm);
    out.values.push_back(Rational(1, 2) * LogValue::of_rational(best->norm));
    out.witnesses.push_back(best->coords);
    chosen = append_row(chosen, best->coords);
  }
  return out;
}

}  // namespace adelic::lattices
