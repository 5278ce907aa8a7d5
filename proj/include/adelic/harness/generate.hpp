#pragma once

#include <cstdint>
#include <string>

#include "adelic/io/json_io.hpp"

namespace adelic::harness {

struct GenerateParams {
  std::string kind;  // random-gram | random-splitting | random-roof
  std::uint64_t seed = 1;
  std::size_t dim = 2;
  long max_abs = 3;
  /// Added to the diagonal of A A^T for random-gram.
  Rational epsilon{1, 4};
};

/// Deterministic random input object (mt19937_64 with modulo reduction, so
/// the bytes only depend on the parameters). Throws ValidationError for an
/// unknown kind or out-of-range parameters.
io::json generate(const GenerateParams& p);

}  // namespace adelic::harness
