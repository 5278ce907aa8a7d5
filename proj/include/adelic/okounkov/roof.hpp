#pragma once

#include <optional>
#include <vector>

#include "adelic/exactlog/log_value.hpp"
#include "adelic/okounkov/polytope.hpp"

namespace adelic::okounkov {

using exactlog::LogValue;
using exactlog::Quantity;

/// x -> gradient . x + offset. Coefficients may carry logarithmic parts.
struct AffinePiece {
  std::vector<Quantity> gradient;
  Quantity offset;

  Quantity evaluate(const RationalVector& x) const;
  bool is_rational() const;
};

/// min over pieces of affine functions on a rational polytope.
class RoofFunction {
 public:
  RoofFunction(RationalPolytope domain, std::vector<AffinePiece> pieces);

  const RationalPolytope& domain() const noexcept { return domain_; }
  const std::vector<AffinePiece>& pieces() const noexcept { return pieces_; }
  std::size_t dim() const noexcept { return domain_.ambient_dim(); }

  /// Exact value at a rational point (minimum over pieces).
  Quantity evaluate(const RationalVector& x) const;
  /// Double evaluation for sampling.
  double evaluate_double(const std::vector<double>& x) const;
  bool gradients_rational() const;

 private:
  RationalPolytope domain_;
  std::vector<AffinePiece> pieces_;
};

struct RoofMax {
  Quantity value;
  /// Maximizer; coordinates are Quantities because log offsets move it.
  std::vector<Quantity> argmax;
  /// LP dual multipliers (empty for single-piece roofs).
  RationalVector dual_certificate;
  bool certificate_verified = false;
};

/// Exact maximum. Single-piece roofs take the best vertex; several pieces
/// need rational gradients and go through the exact simplex method. Throws
/// DomainError for a degenerate domain.
RoofMax roof_max(const RoofFunction& g);

struct RoofIntegral {
  /// Integral of G over the domain.
  Quantity integral;
  /// (d+1)! [K:K0] integral.
  Quantity vol_chi;
  /// (d+1)! [K:K0] integral of max(0, G) when it can be decided exactly.
  std::optional<Quantity> vol_arith;
};

/// Exact integral via the placing triangulation; several pieces need
/// d <= 3 and pairwise rational offset differences (Unsupported otherwise).
RoofIntegral roof_integral(const RoofFunction& g, unsigned field_degree = 1);

enum class ZhangOutcome { Equality, Strict, Violated };

struct ZhangReport {
  Quantity zeta_ess;
  Quantity height;  // (d+1)! integral
  Quantity vol_chi;
  Quantity bound;   // height / ((d+1) deg)
  ZhangOutcome outcome = ZhangOutcome::Strict;
  bool roof_constant = false;
  /// Equality holds exactly when the roof is constant.
  bool criterion_consistent = false;
  /// d! vol(domain) == degree_D.
  bool degree_matches_volume = false;
};

/// Throws DomainError when the domain has zero volume or degree_D <= 0.
ZhangReport zhang_check(const RoofFunction& g, const Rational& degree_d, unsigned field_degree = 1);

/// Standard (d-1)-simplex with the single affine piece taking value
/// -1/2 ln q_i at the i-th vertex (vertex 0 is the origin).
RoofFunction roof_from_diagonal_lattice(const RationalVector& q);

}  // namespace adelic::okounkov
