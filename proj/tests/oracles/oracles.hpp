#pragma once

// Independent reference implementations used only by the tests. They share
// the number types of the library but none of its algorithms: no LLL, no
// Fincke-Pohst, no Hermite forms, no log arithmetic.

#include <cstdint>
#include <vector>

#include "adelic/core/rational.hpp"
#include "adelic/ffbundles/bundles.hpp"
#include "adelic/okounkov/roof.hpp"

namespace oracle {

using adelic::Integer;
using adelic::Rational;
using adelic::RationalMatrix;

using Vec = std::vector<long>;

Rational det(const RationalMatrix& m);
Rational norm(const RationalMatrix& gram, const Vec& x);
std::size_t rank(const std::vector<Vec>& rows);

/// Every nonzero x (up to sign, first nonzero coordinate positive) with
/// x^T G x <= bound, found by scanning the box |x_i| <= sqrt(bound (G^-1)_ii).
std::vector<Vec> box_vectors(const RationalMatrix& gram, const Rational& bound);

/// Squared successive minima, by greedy selection over norm-sorted box
/// vectors with bound max_i G_ii (the unit vectors are independent).
std::vector<Rational> successive_minima_sq(const RationalMatrix& gram);

/// Minimal Gram determinant of a saturated rank-r sublattice, for d <= 3.
std::vector<Rational> minimal_determinants(const RationalMatrix& gram);

/// Successive slopes from the per-rank minimal determinants D_0..D_d, each
/// as the pair (D_b / D_a, b - a): mu_i = -ln(D_b/D_a) / (2 (b - a)) on the
/// hull segment a -> b that contains i. Hull decisions use exact rational
/// powers.
struct SlopePiece {
  Rational ratio;
  long length;
};
std::vector<SlopePiece> slopes_from_determinants(const std::vector<Rational>& dets);

/// dim_k of {x = u M : deg x_j <= m + t_j}, by linear algebra on the
/// coefficients of x against divisibility by det M.
long riemann_roch_h0(const adelic::ffbundles::MatrixDivisor& m, long twist);

struct MonteCarlo {
  double mean = 0;
  double standard_error = 0;
};
/// Uniform samples on the standard simplex (Dirichlet(1,...,1)).
MonteCarlo integrate_on_simplex(const adelic::okounkov::RoofFunction& g, std::size_t samples, std::uint64_t seed);

}  // namespace oracle
