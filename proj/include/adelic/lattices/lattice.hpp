#pragma once

#include <cstddef>
#include <cstdint>

#include "adelic/core/rational.hpp"
#include "adelic/exactlog/log_value.hpp"

namespace adelic::lattices {

using exactlog::LogValue;

/// Work limits shared by every enumeration-based computation.
struct SearchLimits {
  /// Largest lattice dimension accepted by minima and slope searches.
  std::size_t dimension_cap = 16;
  /// Maximum enumeration tree nodes per search.
  std::uint64_t node_budget = 20'000'000;
};

/// Rank-d lattice over Q: the standard Z^d with a rational positive-definite
/// Gram matrix. Construction validates symmetry and positivity of all
/// leading principal minors.
class EuclideanLattice {
 public:
  explicit EuclideanLattice(RationalMatrix gram);

  static EuclideanLattice identity(std::size_t d);
  static EuclideanLattice diagonal(const RationalVector& entries);
  /// Lattice spanned by the rows of `basis` (rational coordinates, full rank)
  /// inside a space with Gram matrix `ambient_gram`, rewritten in its own
  /// Z-basis. The basis is first brought to Hermite form, so the result only
  /// depends on the lattice, not on the generators chosen.
  static EuclideanLattice from_basis(const RationalMatrix& ambient_gram, const RationalMatrix& basis);

  std::size_t dim() const noexcept { return gram_.rows(); }
  const RationalMatrix& gram() const noexcept { return gram_; }
  Rational determinant() const;
  bool is_diagonal() const;

  bool operator==(const EuclideanLattice& other) const { return gram_ == other.gram_; }

 private:
  RationalMatrix gram_;
};

/// -1/2 ln det(gram).
LogValue degree(const EuclideanLattice& e);
/// degree / dim.
LogValue slope(const EuclideanLattice& e);

EuclideanLattice dual(const EuclideanLattice& e);
EuclideanLattice direct_sum(const EuclideanLattice& a, const EuclideanLattice& b);

/// Height of the line through s: 1/2 ln(p^T G p) for the primitive integer
/// vector p on that line. Throws DomainError for s = 0.
LogValue height_of_vector(const EuclideanLattice& e, const RationalVector& s);

/// Degree of the saturated sublattice generated by the integer rows of
/// `generators` (full row rank).
LogValue sublattice_degree(const EuclideanLattice& e, const IntMatrix& generators);
/// det Gram of the saturation of the row span of `generators`.
Rational saturated_determinant(const EuclideanLattice& e, const IntMatrix& generators);

}  // namespace adelic::lattices
