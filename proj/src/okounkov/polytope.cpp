#include "adelic/okounkov/polytope.hpp"

#include <algorithm>
#include <map>

#include "adelic/core/errors.hpp"
#include "adelic/lattices/integer_linalg.hpp"

namespace adelic::okounkov {

namespace {

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const Rational piv = m(r, c);
    for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) /= piv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<RationalVector> nullspace(const RationalMatrix& input) {
  RationalMatrix m = input;
  const std::vector<std::size_t> piv = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto c : piv) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalVector as_rational(const IntVector& v) {
  RationalVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return r;
}

// Generalized cross product of the d-1 edge vectors of a facet.
RationalVector facet_normal(const std::vector<RationalVector>& pts) {
  const std::size_t d = pts[0].size();
  RationalMatrix edges(d - 1, d);
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t k = 0; k < d; ++k) edges(i - 1, k) = pts[i][k] - pts[0][k];
  RationalVector n(d);
  for (std::size_t j = 0; j < d; ++j) {
    RationalMatrix minor(d - 1, d - 1);
    for (std::size_t i = 0; i + 1 < d; ++i) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < d; ++k) {
        if (k == j) continue;
        minor(i, cc++) = edges(i, k);
      }
    }
    const Rational det = determinant(minor);
    n[j] = (j % 2 == 0) ? det : Rational(-det);
  }
  return n;
}

struct BoundaryFacet {
  std::vector<std::size_t> idx;
  RationalVector normal;
  Rational offset;
};

BoundaryFacet make_facet(std::vector<std::size_t> idx, const std::vector<RationalVector>& pts,
                         const RationalVector& interior) {
  std::vector<RationalVector> corners;
  for (const auto i : idx) corners.push_back(pts[i]);
  BoundaryFacet f{std::move(idx), facet_normal(corners), Rational(0)};
  f.offset = dot(f.normal, corners[0]);
  if (dot(f.normal, interior) > f.offset) {
    for (auto& x : f.normal) x = -x;
    f.offset = -f.offset;
  }
  return f;
}

Halfspace primitive_halfspace(const RationalVector& normal, const Rational& offset) {
  const IntVector p = lattices::primitive_vector(normal);
  // p = s * normal for some positive rational s.
  std::size_t k = 0;
  while (normal[k] == 0) ++k;
  const Rational s = Rational(p[k]) / normal[k];
  return {as_rational(p), offset * s};
}

struct FullHull {
  std::vector<RationalVector> vertices;
  std::vector<Halfspace> facets;
  std::vector<Simplex> simplices;
  Rational volume{0};
};

FullHull full_dimensional_hull(const std::vector<RationalVector>& pts, std::size_t d) {
  FullHull out;
  if (d == 0) {
    out.vertices = {RationalVector{}};
    out.simplices = {Simplex{RationalVector{}}};
    out.volume = 1;
    return out;
  }
  // Initial simplex: lexicographically first affinely independent points.
  std::vector<std::size_t> init{0};
  RationalMatrix diffs(0, d);
  for (std::size_t i = 1; i < pts.size() && init.size() < d + 1; ++i) {
    RationalMatrix trial(init.size(), d);
    for (std::size_t r = 0; r + 1 < init.size(); ++r)
      for (std::size_t k = 0; k < d; ++k) trial(r, k) = diffs(r, k);
    for (std::size_t k = 0; k < d; ++k) trial(init.size() - 1, k) = pts[i][k] - pts[0][k];
    if (rank(trial) == init.size()) {
      diffs = trial;
      init.push_back(i);
    }
  }
  RationalVector center(d, Rational(0));
  for (const auto i : init)
    for (std::size_t k = 0; k < d; ++k) center[k] += pts[i][k];
  for (auto& x : center) x /= Rational(static_cast<long>(d + 1));

  std::vector<BoundaryFacet> boundary;
  for (std::size_t skip = 0; skip < init.size(); ++skip) {
    std::vector<std::size_t> idx;
    for (std::size_t t = 0; t < init.size(); ++t)
      if (t != skip) idx.push_back(init[t]);
    boundary.push_back(make_facet(std::move(idx), pts, center));
  }
  std::vector<std::vector<std::size_t>> simplices{init};
  std::vector<bool> placed(pts.size(), false);
  for (const auto i : init) placed[i] = true;

  for (std::size_t p = 0; p < pts.size(); ++p) {
    if (placed[p]) continue;
    std::vector<BoundaryFacet> keep;
    std::vector<const BoundaryFacet*> visible;
    for (const auto& f : boundary) {
      if (dot(f.normal, pts[p]) > f.offset) visible.push_back(&f);
    }
    if (visible.empty()) continue;
    placed[p] = true;
    std::map<std::vector<std::size_t>, int> ridges;
    for (const BoundaryFacet* f : visible) {
      std::vector<std::size_t> s = f->idx;
      s.push_back(p);
      simplices.push_back(std::move(s));
      for (std::size_t drop = 0; drop < f->idx.size(); ++drop) {
        std::vector<std::size_t> ridge;
        for (std::size_t t = 0; t < f->idx.size(); ++t)
          if (t != drop) ridge.push_back(f->idx[t]);
        std::sort(ridge.begin(), ridge.end());
        ridges[ridge] += 1;
      }
    }
    for (const auto& f : boundary) {
      if (!(dot(f.normal, pts[p]) > f.offset)) keep.push_back(f);
    }
    for (const auto& [ridge, count] : ridges) {
      if (count != 1) continue;
      std::vector<std::size_t> idx = ridge;
      idx.push_back(p);
      keep.push_back(make_facet(std::move(idx), pts, center));
    }
    boundary = std::move(keep);
  }

  for (const auto& s : simplices) {
    Simplex corners;
    for (const auto i : s) corners.push_back(pts[i]);
    out.volume += simplex_volume(corners);
    out.simplices.push_back(std::move(corners));
  }

  std::map<std::pair<RationalVector, Rational>, bool> seen;
  for (const auto& f : boundary) {
    Halfspace h = primitive_halfspace(f.normal, f.offset);
    auto key = std::make_pair(h.normal, h.offset);
    if (seen.emplace(key, true).second) out.facets.push_back(std::move(h));
  }
  std::sort(out.facets.begin(), out.facets.end(), [](const Halfspace& a, const Halfspace& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  });

  for (std::size_t p = 0; p < pts.size(); ++p) {
    if (!placed[p]) continue;
    std::vector<RationalVector> rows;
    for (const auto& h : out.facets)
      if (dot(h.normal, pts[p]) == h.offset) rows.push_back(h.normal);
    if (rows.size() < d) continue;
    RationalMatrix m(rows.size(), d);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t k = 0; k < d; ++k) m(r, k) = rows[r][k];
    if (rank(m) == d) out.vertices.push_back(pts[p]);
  }
  return out;
}

}  // namespace

Rational simplex_volume(const Simplex& s) {
  const std::size_t d = s.size() - 1;
  if (d == 0) return Rational(1);
  RationalMatrix m(d, d);
  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t k = 0; k < d; ++k) m(i - 1, k) = s[i][k] - s[0][k];
  return abs(determinant(m)) / Rational(factorial(static_cast<unsigned>(d)));
}

RationalPolytope RationalPolytope::hull(const std::vector<RationalVector>& input, std::size_t ambient_dim) {
  if (input.empty()) throw DomainError("convex hull of an empty point set");
  for (const auto& p : input)
    if (p.size() != ambient_dim) throw ValidationError("point dimension does not match ambient dimension");
  std::vector<RationalVector> pts = input;
  for (auto& p : pts)
    for (auto& x : p) x.canonicalize();
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  RationalPolytope poly;
  poly.ambient_ = ambient_dim;
  const std::size_t d = ambient_dim;
  RationalMatrix diffs(pts.size() - 1, d);
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t k = 0; k < d; ++k) diffs(i - 1, k) = pts[i][k] - pts[0][k];
  RationalMatrix reduced = diffs;
  const std::vector<std::size_t> coords = rref(reduced);
  poly.affine_ = coords.size();

  if (poly.affine_ == d) {
    FullHull h = full_dimensional_hull(pts, d);
    poly.vertices_ = std::move(h.vertices);
    poly.facets_ = std::move(h.facets);
    poly.simplices_ = std::move(h.simplices);
    poly.volume_ = h.volume;
  } else {
    // The coordinate projection onto the pivot columns is injective on the
    // affine hull, so hull there and map vertices back.
    const std::size_t k = poly.affine_;
    std::vector<RationalVector> proj;
    for (const auto& p : pts) {
      RationalVector q(k);
      for (std::size_t t = 0; t < k; ++t) q[t] = p[coords[t]];
      proj.push_back(std::move(q));
    }
    const FullHull h = full_dimensional_hull(proj, k);
    for (const auto& v : h.vertices) {
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (proj[i] == v) {
          poly.vertices_.push_back(pts[i]);
          break;
        }
      }
    }
    std::sort(poly.vertices_.begin(), poly.vertices_.end());
    for (const auto& f : h.facets) {
      RationalVector n(d, Rational(0));
      for (std::size_t t = 0; t < k; ++t) n[coords[t]] = f.normal[t];
      poly.facets_.push_back({std::move(n), f.offset});
    }
    for (const auto& w : nullspace(diffs)) {
      const Halfspace eq = primitive_halfspace(w, dot(w, pts[0]));
      poly.equalities_.push_back(eq);
    }
    poly.volume_ = 0;
  }

  for (const auto& v : poly.vertices_) {
    if (!poly.contains(v)) throw InternalError("hull vertex violates its own facet description");
  }
  for (const auto& f : poly.facets_) {
    std::size_t tight = 0;
    for (const auto& v : poly.vertices_) tight += dot(f.normal, v) == f.offset ? 1 : 0;
    if (tight < poly.affine_) throw InternalError("hull facet is not supported by enough vertices");
  }
  return poly;
}

RationalPolytope RationalPolytope::standard_simplex(std::size_t d) {
  std::vector<RationalVector> pts{RationalVector(d, Rational(0))};
  for (std::size_t i = 0; i < d; ++i) {
    RationalVector e(d, Rational(0));
    e[i] = 1;
    pts.push_back(std::move(e));
  }
  return hull(pts, d);
}

bool RationalPolytope::contains(const RationalVector& x) const {
  if (x.size() != ambient_) return false;
  for (const auto& f : facets_)
    if (dot(f.normal, x) > f.offset) return false;
  for (const auto& e : equalities_)
    if (dot(e.normal, x) != e.offset) return false;
  return true;
}

bool RationalPolytope::contains(const RationalPolytope& other) const {
  for (const auto& v : other.vertices())
    if (!contains(v)) return false;
  return true;
}

std::vector<RationalVector> enumerate_vertices(const std::vector<Halfspace>& constraints, std::size_t d) {
  std::vector<RationalVector> out;
  const std::size_t m = constraints.size();
  if (d == 0) return {RationalVector{}};
  if (m < d) return out;
  std::vector<std::size_t> pick(d);
  for (std::size_t i = 0; i < d; ++i) pick[i] = i;
  for (;;) {
    RationalMatrix a(d, d);
    RationalVector b(d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t k = 0; k < d; ++k) a(r, k) = constraints[pick[r]].normal[k];
      b[r] = constraints[pick[r]].offset;
    }
    if (determinant(a) != 0) {
      const RationalMatrix ai = inverse(a);
      RationalVector x(d, Rational(0));
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t k = 0; k < d; ++k) x[r] += ai(r, k) * b[k];
      bool ok = true;
      for (const auto& c : constraints) {
        if (dot(c.normal, x) > c.offset) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(std::move(x));
    }
    std::size_t i = d;
    while (i > 0 && pick[i - 1] == m - d + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace adelic::okounkov
