#pragma once

#include <vector>

#include "adelic/core/rational.hpp"

namespace adelic::okounkov {

/// normal . x <= offset (or == offset for equalities).
struct Halfspace {
  RationalVector normal;
  Rational offset;
};

/// A simplex of the placing triangulation, as its d+1 corner points.
using Simplex = std::vector<RationalVector>;

/// Convex hull of finitely many rational points with both V- and H-
/// representations. Full-dimensional hulls are triangulated by placing points
/// in lexicographic order; lower-dimensional hulls are flagged degenerate and
/// described by facets plus affine-hull equalities.
class RationalPolytope {
 public:
  RationalPolytope() = default;

  /// Throws DomainError for an empty point set and ValidationError when a
  /// point has the wrong length.
  static RationalPolytope hull(const std::vector<RationalVector>& points, std::size_t ambient_dim);
  /// conv{0, e_1, ..., e_d}.
  static RationalPolytope standard_simplex(std::size_t d);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t affine_dim() const noexcept { return affine_; }
  bool is_degenerate() const noexcept { return affine_ < ambient_; }

  /// Extreme points in lexicographic order.
  const std::vector<RationalVector>& vertices() const noexcept { return vertices_; }
  /// Outward facet inequalities with primitive integer normals.
  const std::vector<Halfspace>& facets() const noexcept { return facets_; }
  /// Equalities cutting out the affine hull (empty when full-dimensional).
  const std::vector<Halfspace>& equalities() const noexcept { return equalities_; }
  /// Placing triangulation (empty when degenerate).
  const std::vector<Simplex>& triangulation() const noexcept { return simplices_; }

  /// Ambient-dimensional volume; 0 when degenerate, 1 for ambient dimension 0.
  const Rational& volume() const noexcept { return volume_; }

  bool contains(const RationalVector& x) const;
  bool contains(const RationalPolytope& other) const;

 private:
  std::size_t ambient_ = 0;
  std::size_t affine_ = 0;
  std::vector<RationalVector> vertices_;
  std::vector<Halfspace> facets_;
  std::vector<Halfspace> equalities_;
  std::vector<Simplex> simplices_;
  Rational volume_{0};
};

/// |det(v_1 - v_0, ..., v_d - v_0)| / d!
Rational simplex_volume(const Simplex& s);

/// Vertices of {x : a_i . x <= b_i}, by solving every d-subset of
/// constraints. Returns an empty list when the region is empty.
std::vector<RationalVector> enumerate_vertices(const std::vector<Halfspace>& constraints, std::size_t d);

}  // namespace adelic::okounkov
