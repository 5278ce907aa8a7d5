#include "adelic/okounkov/roof.hpp"

#include <algorithm>

#include "adelic/core/errors.hpp"
#include "adelic/exactlog/compare.hpp"
#include "adelic/okounkov/simplex_lp.hpp"

namespace adelic::okounkov {

using exactlog::Ordering;

Quantity AffinePiece::evaluate(const RationalVector& x) const {
  Quantity v = offset;
  for (std::size_t i = 0; i < gradient.size(); ++i) {
    if (x[i] != 0) v += gradient[i] * x[i];
  }
  return v;
}

bool AffinePiece::is_rational() const {
  if (!offset.is_rational()) return false;
  for (const auto& g : gradient)
    if (!g.is_rational()) return false;
  return true;
}

RoofFunction::RoofFunction(RationalPolytope domain, std::vector<AffinePiece> pieces)
    : domain_(std::move(domain)), pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw ValidationError("roof function needs at least one piece");
  for (const auto& p : pieces_) {
    if (p.gradient.size() != domain_.ambient_dim()) {
      throw ValidationError("roof gradient length does not match the domain dimension");
    }
  }
}

Quantity RoofFunction::evaluate(const RationalVector& x) const {
  Quantity best = pieces_.front().evaluate(x);
  for (std::size_t j = 1; j < pieces_.size(); ++j) {
    Quantity v = pieces_[j].evaluate(x);
    if (exactlog::less(v, best)) best = std::move(v);
  }
  return best;
}

double RoofFunction::evaluate_double(const std::vector<double>& x) const {
  double best = 0;
  for (std::size_t j = 0; j < pieces_.size(); ++j) {
    double v = exactlog::to_double(pieces_[j].offset);
    for (std::size_t i = 0; i < x.size(); ++i) v += exactlog::to_double(pieces_[j].gradient[i]) * x[i];
    if (j == 0 || v < best) best = v;
  }
  return best;
}

bool RoofFunction::gradients_rational() const {
  for (const auto& p : pieces_)
    for (const auto& g : p.gradient)
      if (!g.is_rational()) return false;
  return true;
}

namespace {

Rational rational_dot(const std::vector<Quantity>& g, const RationalVector& v) {
  Rational s(0);
  for (std::size_t i = 0; i < g.size(); ++i) s += g[i].constant() * v[i];
  return s;
}

std::vector<Quantity> as_quantities(const RationalVector& v) {
  return std::vector<Quantity>(v.begin(), v.end());
}

Quantity integrate_affine(const AffinePiece& piece, const std::vector<Simplex>& simplices) {
  Quantity total;
  for (const auto& s : simplices) {
    Quantity sum;
    for (const auto& corner : s) sum += piece.evaluate(corner);
    total += sum * (simplex_volume(s) / Rational(static_cast<long>(s.size())));
  }
  return total;
}

// Pieces written as common log part + rational remainder.
struct SplitPieces {
  LogValue common;
  std::vector<RationalVector> grads;
  std::vector<Rational> offsets;
};

std::optional<SplitPieces> split_rational(const RoofFunction& g) {
  if (!g.gradients_rational()) return std::nullopt;
  SplitPieces sp;
  sp.common = g.pieces().front().offset.log_part();
  for (const auto& p : g.pieces()) {
    if (p.offset.log_part() != sp.common) return std::nullopt;
    RationalVector grad;
    for (const auto& q : p.gradient) grad.push_back(q.constant());
    // Skip exact duplicates so that cells overlap only on boundaries.
    bool dup = false;
    for (std::size_t k = 0; k < sp.grads.size(); ++k) dup = dup || (sp.grads[k] == grad && sp.offsets[k] == p.offset.constant());
    if (dup) continue;
    sp.grads.push_back(std::move(grad));
    sp.offsets.push_back(p.offset.constant());
  }
  return sp;
}

// Integral of min_j(grad_j . x + offset_j) over the domain, optionally
// restricted to where the minimum is nonnegative.
Rational integrate_cells(const RationalPolytope& domain, const SplitPieces& sp, bool clip_nonnegative) {
  const std::size_t d = domain.ambient_dim();
  Rational total(0);
  for (std::size_t j = 0; j < sp.grads.size(); ++j) {
    std::vector<Halfspace> cons = domain.facets();
    for (std::size_t k = 0; k < sp.grads.size(); ++k) {
      if (k == j) continue;
      RationalVector n(d);
      for (std::size_t i = 0; i < d; ++i) n[i] = sp.grads[j][i] - sp.grads[k][i];
      cons.push_back({std::move(n), sp.offsets[k] - sp.offsets[j]});
    }
    if (clip_nonnegative) {
      RationalVector n(d);
      for (std::size_t i = 0; i < d; ++i) n[i] = -sp.grads[j][i];
      cons.push_back({std::move(n), sp.offsets[j]});
    }
    const std::vector<RationalVector> pts = enumerate_vertices(cons, d);
    if (pts.empty()) continue;
    const RationalPolytope cell = RationalPolytope::hull(pts, d);
    if (cell.is_degenerate()) continue;
    for (const auto& s : cell.triangulation()) {
      Rational sum(0);
      for (const auto& corner : s) {
        Rational v = sp.offsets[j];
        for (std::size_t i = 0; i < d; ++i) v += sp.grads[j][i] * corner[i];
        sum += v;
      }
      total += sum * simplex_volume(s) / Rational(static_cast<long>(s.size()));
    }
  }
  return total;
}

}  // namespace

RoofMax roof_max(const RoofFunction& g) {
  const RationalPolytope& dom = g.domain();
  if (dom.is_degenerate()) throw DomainError("roof domain is degenerate");
  RoofMax out;
  if (g.pieces().size() == 1) {
    const AffinePiece& p = g.pieces().front();
    bool first = true;
    for (const auto& v : dom.vertices()) {
      Quantity val = p.evaluate(v);
      if (first || exactlog::less(out.value, val)) {
        out.value = std::move(val);
        out.argmax = as_quantities(v);
        first = false;
      }
    }
    out.certificate_verified = true;
    return out;
  }
  if (!g.gradients_rational()) throw Unsupported("several roof pieces with logarithmic gradients");

  // Variables: lambda_v (one per vertex), t+, t-, then one slack per piece.
  const auto& verts = dom.vertices();
  const std::size_t nv = verts.size();
  const std::size_t np = g.pieces().size();
  const std::size_t cols = nv + 2 + np;
  LpProblem lp{RationalMatrix(np + 1, cols), std::vector<Quantity>(np + 1), RationalVector(cols, Rational(0))};
  for (std::size_t j = 0; j < np; ++j) {
    const AffinePiece& p = g.pieces()[j];
    for (std::size_t v = 0; v < nv; ++v) lp.a(j, v) = -rational_dot(p.gradient, verts[v]);
    lp.a(j, nv) = 1;
    lp.a(j, nv + 1) = -1;
    lp.a(j, nv + 2 + j) = 1;
    lp.b[j] = p.offset;
  }
  for (std::size_t v = 0; v < nv; ++v) lp.a(np, v) = 1;
  lp.b[np] = Rational(1);
  lp.c[nv] = 1;
  lp.c[nv + 1] = -1;

  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal) throw InternalError("roof maximization LP did not reach an optimum");
  out.value = sol.value;
  out.argmax.assign(dom.ambient_dim(), Quantity());
  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t i = 0; i < dom.ambient_dim(); ++i)
      if (verts[v][i] != 0) out.argmax[i] += sol.x[v] * verts[v][i];
  out.dual_certificate = sol.dual;
  out.certificate_verified = verify_optimality(lp, sol);
  return out;
}

RoofIntegral roof_integral(const RoofFunction& g, unsigned field_degree) {
  const RationalPolytope& dom = g.domain();
  const std::size_t d = dom.ambient_dim();
  const Rational scale = Rational(factorial(static_cast<unsigned>(d + 1))) * Rational(field_degree);
  RoofIntegral out;
  if (dom.is_degenerate()) {
    out.vol_arith = Quantity();
    return out;
  }
  const std::optional<SplitPieces> split = split_rational(g);
  if (g.pieces().size() == 1) {
    out.integral = integrate_affine(g.pieces().front(), dom.triangulation());
  } else {
    if (d > 3) throw Unsupported("several roof pieces in dimension above 3");
    if (!split) throw Unsupported("several roof pieces need rational gradients and rational offset differences");
    out.integral = Quantity(integrate_cells(dom, *split, false), dom.volume() * split->common);
  }
  out.vol_chi = out.integral * scale;

  bool nonneg = true;
  for (const auto& v : dom.vertices()) nonneg = nonneg && exactlog::sign(g.evaluate(v)) >= 0;
  if (nonneg) {
    out.vol_arith = out.vol_chi;
  } else if (exactlog::sign(roof_max(g).value) <= 0) {
    out.vol_arith = Quantity();
  } else if (split && split->common.is_zero() && (g.pieces().size() == 1 || d <= 3)) {
    out.vol_arith = Quantity(integrate_cells(dom, *split, true) * scale);
  }
  return out;
}

ZhangReport zhang_check(const RoofFunction& g, const Rational& degree_d, unsigned field_degree) {
  const RationalPolytope& dom = g.domain();
  if (dom.volume() == 0) throw DomainError("zhang check needs a domain of positive volume");
  if (degree_d <= 0) throw DomainError("divisor degree must be positive");
  const std::size_t d = dom.ambient_dim();
  ZhangReport rep;
  rep.zeta_ess = roof_max(g).value;
  const RoofIntegral integ = roof_integral(g, field_degree);
  rep.vol_chi = integ.vol_chi;
  rep.height = integ.integral * Rational(factorial(static_cast<unsigned>(d + 1)));
  rep.bound = rep.height * (Rational(1) / (Rational(static_cast<long>(d + 1)) * degree_d));
  switch (exactlog::compare(rep.zeta_ess, rep.bound)) {
    case Ordering::Equal:
      rep.outcome = ZhangOutcome::Equality;
      break;
    case Ordering::Greater:
      rep.outcome = ZhangOutcome::Strict;
      break;
    case Ordering::Less:
      rep.outcome = ZhangOutcome::Violated;
      break;
  }
  rep.roof_constant = true;
  for (const auto& v : dom.vertices()) rep.roof_constant = rep.roof_constant && g.evaluate(v) == rep.zeta_ess;
  rep.criterion_consistent = (rep.outcome == ZhangOutcome::Equality) == rep.roof_constant;
  rep.degree_matches_volume = Rational(factorial(static_cast<unsigned>(d))) * dom.volume() == degree_d;
  return rep;
}

RoofFunction roof_from_diagonal_lattice(const RationalVector& q) {
  if (q.empty()) throw DomainError("diagonal roof needs at least one entry");
  const std::size_t d = q.size() - 1;
  std::vector<LogValue> vals;
  for (const auto& x : q) vals.push_back(make_rational(-1, 2) * LogValue::of_rational(x));
  AffinePiece piece;
  piece.offset = Quantity(vals[0]);
  for (std::size_t k = 0; k < d; ++k) piece.gradient.emplace_back(vals[k + 1] - vals[0]);
  return RoofFunction(RationalPolytope::standard_simplex(d), {piece});
}

}  // namespace adelic::okounkov
