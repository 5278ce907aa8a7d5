#pragma once

#include <vector>

#include "adelic/ffbundles/polynomial.hpp"

namespace adelic::ffbundles {

/// Splitting degrees a_1 >= ... >= a_d of a vector bundle on P^1.
class SplittingType {
 public:
  SplittingType() = default;
  /// Sorts into non-increasing order.
  explicit SplittingType(std::vector<long> degrees);

  const std::vector<long>& degrees() const noexcept { return degrees_; }
  std::size_t rank() const noexcept { return degrees_.size(); }
  long total_degree() const;
  long pmax() const { return degrees_.front(); }
  long pmin() const { return degrees_.back(); }

  bool operator==(const SplittingType& o) const { return degrees_ == o.degrees_; }

 private:
  std::vector<long> degrees_;
};

/// Bundle given by a polynomial matrix: sections over the affine line are
/// the k[T]-row span of `matrix`; at infinity, H^0(E(m)) keeps the vectors x
/// with deg x_j <= m + infinity_twist[j].
struct MatrixDivisor {
  Field field = Field::rationals();
  PolyMatrix matrix;
  std::vector<long> infinity_twist;
};

struct WeakPopovResult {
  PolyMatrix reduced;
  /// Shifted row degrees max_j(deg M_ij - t_j) of the reduced rows.
  std::vector<long> row_degrees;
  /// Leading (pivot) column of each row.
  std::vector<std::size_t> pivots;
};

/// Mulders-Storjohann reduction to shifted weak Popov form with shift -t.
/// Throws DomainError when the matrix is singular.
WeakPopovResult weak_popov(const MatrixDivisor& m);

/// Splitting degrees a_i = -(shifted row degree), sorted non-increasing.
SplittingType reduce_to_splitting(const MatrixDivisor& m);

/// mu_hat_i = a_i.
std::vector<long> slopes_ff(const SplittingType& s);
/// zeta_i = -a_i, non-decreasing.
std::vector<long> minima_ff(const SplittingType& s);

/// Default bound on the rank of derived splitting types.
inline constexpr std::size_t kDefaultFfCap = 4096;

SplittingType sym_ff(const SplittingType& s, unsigned n, std::size_t cap = kDefaultFfCap);
SplittingType wedge_ff(const SplittingType& s, std::size_t r, std::size_t cap = kDefaultFfCap);
SplittingType dual_ff(const SplittingType& s);
SplittingType tensor_ff(const SplittingType& a, const SplittingType& b, std::size_t cap = kDefaultFfCap);

}  // namespace adelic::ffbundles
