#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "adelic/core/rational.hpp"

namespace adelic::lattices {

struct ShortVector {
  IntVector coords;
  Rational norm;  // x^T G x
};

/// Fincke-Pohst enumeration of all nonzero x with x^T G x <= bound, one
/// representative per ±x pair (highest nonzero coordinate positive).
/// Coordinates are with respect to the basis of `gram`. Throws ResourceError
/// when more than `node_budget` tree nodes would be visited.
std::vector<ShortVector> enumerate_short_vectors(const RationalMatrix& gram, const Rational& bound,
                                                 std::uint64_t node_budget);

/// Same search expressed in original coordinates, after LLL preprocessing.
/// Vectors are sign-normalized so the first nonzero coordinate is positive.
std::vector<ShortVector> short_vectors(const RationalMatrix& gram, const Rational& bound,
                                       std::uint64_t node_budget);

/// Makes the first nonzero entry positive.
IntVector sign_normalized(IntVector v);

}  // namespace adelic::lattices
