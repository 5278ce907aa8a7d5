#pragma once

#include <map>
#include <optional>
#include <vector>

#include "adelic/okounkov/polytope.hpp"

namespace adelic::okounkov {

/// Valuation vectors of a graded monomial series: level n holds the exponent
/// vectors nu with nu/n in the body.
struct MonomialSeries {
  std::size_t dim = 0;
  std::map<unsigned, std::vector<std::vector<long>>> levels;
};

/// Convex hull of all nu/n. Throws DomainError for an empty series and
/// ValidationError for level 0 or vectors of the wrong length.
RationalPolytope okounkov_body(const MonomialSeries& s);

/// Points nu/n of a single level, sorted and deduplicated.
std::vector<RationalVector> normalized_points(const MonomialSeries& s, unsigned level);

}  // namespace adelic::okounkov
