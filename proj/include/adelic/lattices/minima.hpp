#pragma once

#include <vector>

#include "adelic/lattices/lattice.hpp"

namespace adelic::lattices {

/// Successive minima over Q. values[i] = 1/2 ln squared_norms[i];
/// witnesses are linearly independent integer vectors realizing them.
struct MinimaProfile {
  std::vector<LogValue> values;
  std::vector<Rational> squared_norms;
  std::vector<IntVector> witnesses;
};

/// Exact minima via LLL-preprocessed Fincke-Pohst enumeration. Among vectors
/// of equal norm the witness with smaller l1 norm wins, then the
/// lexicographically larger one (so e1 precedes e2). Throws ResourceError
/// when the dimension cap or node budget is exceeded.
MinimaProfile successive_minima(const EuclideanLattice& e, const SearchLimits& limits = {});

}  // namespace adelic::lattices
