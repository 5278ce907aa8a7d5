#pragma once

#include "adelic/core/rational.hpp"

namespace adelic::lattices {

/// Gram-Schmidt data of a Gram matrix: mu(i, j) for j < i and the squared
/// lengths b[i] of the orthogonalized vectors.
struct GramSchmidt {
  RationalMatrix mu;
  RationalVector b;
};

GramSchmidt gram_schmidt(const RationalMatrix& gram);

/// Result of LLL on a Gram matrix: `transform` is unimodular and its rows are
/// the reduced basis in the original coordinates; `gram` = T G T^T.
struct LllResult {
  IntMatrix transform;
  RationalMatrix gram;
};

/// Exact LLL reduction with Lovasz parameter `delta`.
LllResult lll_reduce(const RationalMatrix& gram, const Rational& delta = Rational(3, 4));

/// LLL on an integer row basis `basis` of a sublattice with ambient Gram
/// `gram`; returns the reduced rows.
IntMatrix lll_reduce_basis(const RationalMatrix& gram, const IntMatrix& basis);

}  // namespace adelic::lattices
