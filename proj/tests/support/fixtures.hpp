#pragma once

#include <random>

#include "adelic/core/errors.hpp"
#include "adelic/lattices/lattice.hpp"

namespace fixtures {

using adelic::Rational;
using adelic::RationalMatrix;
using adelic::lattices::EuclideanLattice;

inline long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Symmetric Gram with entries p/q, |p| <= max_num, 1 <= q <= max_den,
/// rejection-sampled until positive definite.
inline EuclideanLattice random_lattice(std::mt19937_64& rng, std::size_t d, long max_num = 4, long max_den = 4) {
  for (;;) {
    RationalMatrix g(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) {
        g(i, j) = adelic::make_rational(draw(rng, -max_num, max_num), draw(rng, 1, max_den));
        g(j, i) = g(i, j);
      }
    if (adelic::is_symmetric_positive_definite(g)) return EuclideanLattice(g);
  }
}

/// Entries in {-2..2}/{1,2}, the oracle corpus family.
inline EuclideanLattice corpus_lattice(std::mt19937_64& rng, std::size_t d) { return random_lattice(rng, d, 2, 2); }

inline adelic::RationalVector random_diagonal(std::mt19937_64& rng, std::size_t d) {
  adelic::RationalVector q;
  for (std::size_t i = 0; i < d; ++i) q.push_back(adelic::make_rational(draw(rng, 1, 30), draw(rng, 1, 12)));
  return q;
}

}  // namespace fixtures
