#include "adelic/lattices/slopes.hpp"

#include <algorithm>
#include <numeric>

#include "adelic/core/errors.hpp"
#include "adelic/exactlog/compare.hpp"
#include "adelic/lattices/enumeration.hpp"
#include "adelic/lattices/integer_linalg.hpp"
#include "adelic/lattices/lll.hpp"

namespace adelic::lattices {

namespace {

IntMatrix canonical_basis(const RationalMatrix& gram, const IntMatrix& generators) {
  const IntMatrix h = hermite_normal_form(saturate(generators).basis);
  IntMatrix reduced = lll_reduce_basis(gram, h);
  for (std::size_t i = 0; i < reduced.rows(); ++i) reduced.set_row(i, sign_normalized(reduced.row(i)));
  return reduced;
}

IntMatrix rows_of(const std::vector<IntVector>& vs, std::size_t width) {
  IntMatrix m(vs.size(), width);
  for (std::size_t i = 0; i < vs.size(); ++i) m.set_row(i, vs[i]);
  return m;
}

RankExtremum diagonal_extremum(const EuclideanLattice& e, std::size_t r) {
  // Cauchy-Binet: det Gram(F) = sum over r-subsets S of (minor_S)^2 * prod_{i in S} q_i.
  const std::size_t d = e.dim();
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return e.gram()(a, a) < e.gram()(b, b); });
  std::vector<std::size_t> pick(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(r));
  std::sort(pick.begin(), pick.end());
  RankExtremum out;
  out.rank = r;
  out.determinant = 1;
  out.basis = IntMatrix(r, d);
  for (std::size_t i = 0; i < r; ++i) {
    out.determinant *= e.gram()(pick[i], pick[i]);
    out.basis(i, pick[i]) = 1;
  }
  out.certified = true;
  return out;
}

class SublatticeSearch {
 public:
  SublatticeSearch(const EuclideanLattice& e, std::size_t r, std::vector<ShortVector> cands, Rational best,
                   const Rational& gamma_power, std::uint64_t budget)
      : e_(e), r_(r), cands_(std::move(cands)), best_(std::move(best)), gamma_(gamma_power), budget_(budget) {}

  // Returns false when the node budget ran out.
  bool run() {
    chosen_ = IntMatrix(0, e_.dim());
    try {
      dfs(0, Rational(1));
    } catch (const ResourceError&) {
      return false;
    }
    return true;
  }

  const Rational& best() const { return best_; }
  bool improved() const { return improved_; }
  const IntMatrix& best_generators() const { return best_gens_; }

 private:
  void dfs(std::size_t start, const Rational& product) {
    const std::size_t k = chosen_.rows();
    if (k == r_) {
      leaf();
      return;
    }
    const Rational limit = gamma_ * best_;
    for (std::size_t j = start; j < cands_.size(); ++j) {
      if (++nodes_ > budget_) throw ResourceError("sublattice search budget exceeded");
      const Rational& nj = cands_[j].norm;
      Rational bound = product;
      for (std::size_t t = k; t < r_; ++t) bound *= nj;
      if (bound > limit) break;
      IntMatrix next = append_row(chosen_, cands_[j].coords);
      if (integer_rank(next) != k + 1) continue;
      IntMatrix saved = std::move(chosen_);
      chosen_ = std::move(next);
      dfs(j + 1, product * nj);
      chosen_ = std::move(saved);
    }
  }

  void leaf() {
    const Saturation sat = saturate(chosen_);
    const Rational det = adelic::determinant(restrict_gram(e_.gram(), sat.basis));
    if (det < best_) {
      best_ = det;
      best_gens_ = sat.basis;
      improved_ = true;
    }
  }

  const EuclideanLattice& e_;
  std::size_t r_;
  std::vector<ShortVector> cands_;
  Rational best_;
  Rational gamma_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  IntMatrix chosen_;
  IntMatrix best_gens_;
  bool improved_ = false;
};

Integer l1(const IntVector& v) {
  Integer s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

}  // namespace

Rational hermite_power(std::size_t r) {
  static const Rational exact[] = {Rational(1), Rational(1), Rational(4, 3), Rational(2), Rational(4),
                                   Rational(8), Rational(64, 3), Rational(64), Rational(256)};
  if (r <= 8) return exact[r];
  Rational base = Rational(1) + Rational(static_cast<long>(r), 4);
  Rational p = 1;
  for (std::size_t i = 0; i < r; ++i) p *= base;
  return p;
}

RankExtremum minimal_sublattice(const EuclideanLattice& e, std::size_t r, const MinimaProfile& minima,
                                const SearchLimits& limits) {
  const std::size_t d = e.dim();
  if (r > d) throw DomainError("rank exceeds lattice dimension");
  RankExtremum out;
  out.rank = r;
  if (r == 0) {
    out.determinant = 1;
    out.basis = IntMatrix(0, d);
    out.certified = true;
    return out;
  }
  if (r == d) {
    out.determinant = e.determinant();
    out.basis = IntMatrix::identity(d);
    out.certified = true;
    return out;
  }
  if (e.is_diagonal()) return diagonal_extremum(e, r);
  if (r == 1) {
    // Shortest vectors are primitive, so the first minimum is optimal.
    out.determinant = minima.squared_norms[0];
    out.basis = rows_of({minima.witnesses[0]}, d);
    out.certified = true;
    return out;
  }

  const std::vector<IntVector> seed(minima.witnesses.begin(), minima.witnesses.begin() + static_cast<std::ptrdiff_t>(r));
  IntMatrix seed_gens = saturate(rows_of(seed, d)).basis;
  const Rational upper = adelic::determinant(restrict_gram(e.gram(), seed_gens));
  const Rational gamma = hermite_power(r);
  Rational prefix = 1;
  for (std::size_t j = 0; j + 1 < r; ++j) prefix *= minima.squared_norms[j];
  const Rational radius = gamma * upper / prefix;

  out.determinant = upper;
  out.basis = canonical_basis(e.gram(), seed_gens);
  std::vector<ShortVector> cands;
  try {
    cands = short_vectors(e.gram(), radius, limits.node_budget);
  } catch (const ResourceError&) {
    out.certified = false;
    return out;
  }
  std::sort(cands.begin(), cands.end(), [](const ShortVector& a, const ShortVector& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    const Integer la = l1(a.coords), lb = l1(b.coords);
    if (la != lb) return la < lb;
    return b.coords < a.coords;
  });
  SublatticeSearch search(e, r, std::move(cands), upper, gamma, limits.node_budget);
  out.certified = search.run();
  if (search.improved()) {
    out.determinant = search.best();
    out.basis = canonical_basis(e.gram(), search.best_generators());
  }
  return out;
}

std::vector<std::size_t> upper_hull(const std::vector<std::size_t>& xs, const std::vector<LogValue>& ys) {
  std::vector<std::size_t> hull;
  for (std::size_t c = 0; c < xs.size(); ++c) {
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2];
      const std::size_t b = hull.back();
      // Drop b when it lies on or below the chord from a to c.
      const Rational bx = Rational(static_cast<long>(xs[b] - xs[a]));
      const Rational cx = Rational(static_cast<long>(xs[c] - xs[a]));
      const LogValue lhs = cx * (ys[b] - ys[a]);
      const LogValue rhs = bx * (ys[c] - ys[a]);
      if (exactlog::compare_values(lhs, rhs) == exactlog::Ordering::Greater) break;
      hull.pop_back();
    }
    hull.push_back(c);
  }
  return hull;
}

HNPolygon hn_polygon(const EuclideanLattice& e, const SearchLimits& limits) {
  const std::size_t d = e.dim();
  if (d > limits.dimension_cap) {
    throw ResourceError("dimension " + std::to_string(d) + " exceeds cap " + std::to_string(limits.dimension_cap));
  }
  MinimaProfile minima;
  if (!e.is_diagonal()) minima = successive_minima(e, limits);
  HNPolygon poly;
  std::vector<std::size_t> xs;
  std::vector<LogValue> ys;
  for (std::size_t r = 0; r <= d; ++r) {
    poly.ranks.push_back(minimal_sublattice(e, r, minima, limits));
    poly.certified = poly.certified && poly.ranks.back().certified;
    xs.push_back(r);
    ys.push_back(Rational(-1, 2) * LogValue::of_rational(poly.ranks.back().determinant));
  }
  const std::vector<std::size_t> hull = upper_hull(xs, ys);
  for (const std::size_t idx : hull) poly.vertices.push_back({xs[idx], ys[idx], poly.ranks[idx].basis});
  for (std::size_t s = 0; s + 1 < poly.vertices.size(); ++s) {
    const auto& a = poly.vertices[s];
    const auto& b = poly.vertices[s + 1];
    const LogValue step = Rational(1, static_cast<long>(b.rank - a.rank)) * (b.degree - a.degree);
    for (std::size_t i = a.rank; i < b.rank; ++i) poly.mu_hat.push_back(step);
  }
  return poly;
}

SlopeResult max_slope(const EuclideanLattice& e, const SearchLimits& limits) {
  const HNPolygon p = hn_polygon(e, limits);
  return {p.mu_hat.front(), p.certified, p.vertices[1].witness};
}

SlopeResult min_slope(const EuclideanLattice& e, const SearchLimits& limits) {
  const HNPolygon p = hn_polygon(e, limits);
  return {p.mu_hat.back(), p.certified, p.vertices[p.vertices.size() - 2].witness};
}

}  // namespace adelic::lattices
