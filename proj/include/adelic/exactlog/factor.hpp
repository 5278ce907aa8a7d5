#pragma once

#include <utility>
#include <vector>

#include "adelic/core/rational.hpp"

namespace adelic::exactlog {

using Factorization = std::vector<std::pair<Integer, unsigned long>>;

/// Prime factorization of |n| for n != 0, sorted by prime. Trial division by
/// small primes, then Pollard-Brent on the remaining cofactor.
Factorization factor(const Integer& n);

bool is_prime(const Integer& n);

}  // namespace adelic::exactlog
