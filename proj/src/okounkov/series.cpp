#include "adelic/okounkov/series.hpp"

#include <algorithm>

#include "adelic/core/errors.hpp"

namespace adelic::okounkov {

std::vector<RationalVector> normalized_points(const MonomialSeries& s, unsigned level) {
  if (level == 0) throw ValidationError("series levels start at 1");
  std::vector<RationalVector> pts;
  const auto it = s.levels.find(level);
  if (it == s.levels.end()) return pts;
  for (const auto& nu : it->second) {
    if (nu.size() != s.dim) throw ValidationError("valuation vector has the wrong length");
    RationalVector p;
    for (const long e : nu) {
      if (e < 0) throw ValidationError("valuation vectors must be nonnegative");
      p.push_back(make_rational(e, static_cast<long>(level)));
    }
    pts.push_back(std::move(p));
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

RationalPolytope okounkov_body(const MonomialSeries& s) {
  std::vector<RationalVector> pts;
  for (const auto& [level, vecs] : s.levels) {
    auto p = normalized_points(s, level);
    pts.insert(pts.end(), p.begin(), p.end());
  }
  if (pts.empty()) throw DomainError("monomial series has no points");
  return RationalPolytope::hull(pts, s.dim);
}

}  // namespace adelic::okounkov
