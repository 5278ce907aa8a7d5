#pragma once

#include "adelic/core/rational.hpp"

namespace adelic::lattices {

/// Row-style Hermite normal form of the row span of `m`: echelon rows with
/// positive pivots and entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped, so the result has rank(m) rows.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Saturation of an integer row basis: the Z-basis of (Q-span of B) ∩ Z^d
/// together with the index [saturation : span(B)].
struct Saturation {
  IntMatrix basis;
  Integer index;
};

/// `rows` must have full row rank; throws DomainError otherwise.
Saturation saturate(const IntMatrix& rows);

/// Integer multiple of a nonzero rational vector with coprime entries and
/// the same direction.
IntVector primitive_vector(const RationalVector& v);

/// gcd of entries, nonnegative.
Integer content(const IntVector& v);

/// Rank of an integer row set over Q.
std::size_t integer_rank(const IntMatrix& rows);

/// Stacks rows of `a` above `extra`.
IntMatrix append_row(const IntMatrix& a, const IntVector& extra);

}  // namespace adelic::lattices
