#pragma once

#include <vector>

#include "adelic/lattices/lattice.hpp"
#include "adelic/lattices/minima.hpp"

namespace adelic::lattices {

/// Smallest covolume among saturated sublattices of a fixed rank.
struct RankExtremum {
  std::size_t rank = 0;
  /// det Gram of the best sublattice found (exact minimum when certified).
  Rational determinant;
  /// LLL-reduced Hermite basis of that sublattice.
  IntMatrix basis;
  bool certified = false;
};

struct HNVertex {
  std::size_t rank = 0;
  LogValue degree;
  IntMatrix witness;
};

/// Upper concave hull of the (rank, degree) points of saturated sublattices.
struct HNPolygon {
  std::vector<HNVertex> vertices;
  /// mu_hat[i-1] = P(i) - P(i-1), non-increasing.
  std::vector<LogValue> mu_hat;
  /// Per-rank extrema r = 0..d that the hull was built from.
  std::vector<RankExtremum> ranks;
  bool certified = true;
};

struct SlopeResult {
  LogValue value;
  bool certified = false;
  IntMatrix witness;
};

/// Hermite constant power gamma_r^r: exact for r <= 8, (1 + r/4)^r beyond.
Rational hermite_power(std::size_t r);

/// Minimal determinant over saturated rank-r sublattices. Uses the diagonal
/// closed form when the Gram is diagonal, otherwise a certified enumeration
/// seeded by the successive minima. A node-budget overrun returns the best
/// sublattice found with certified = false.
RankExtremum minimal_sublattice(const EuclideanLattice& e, std::size_t r, const MinimaProfile& minima,
                                const SearchLimits& limits = {});

HNPolygon hn_polygon(const EuclideanLattice& e, const SearchLimits& limits = {});
/// Slope of the first hull segment, witnessed by the first vertex's sublattice.
SlopeResult max_slope(const EuclideanLattice& e, const SearchLimits& limits = {});
/// Slope of the last hull segment (mu_hat_d).
SlopeResult min_slope(const EuclideanLattice& e, const SearchLimits& limits = {});

/// Upper concave hull of points (x_i, y_i) with strictly increasing x.
/// Returns indices of the strict vertices.
std::vector<std::size_t> upper_hull(const std::vector<std::size_t>& xs, const std::vector<LogValue>& ys);

}  // namespace adelic::lattices
