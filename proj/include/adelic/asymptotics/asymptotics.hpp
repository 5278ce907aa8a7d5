#pragma once

#include <string>
#include <utility>
#include <vector>

#include "adelic/exactlog/compare.hpp"
#include "adelic/lattices/lattice.hpp"

namespace adelic::asymptotics {

using exactlog::LogValue;
using exactlog::Ordering;
using exactlog::Quantity;
using lattices::EuclideanLattice;
using lattices::SearchLimits;

/// Default prefix length by dimension: 8 for d <= 2, 4 for d = 3, 2 for d = 4, else 1.
unsigned default_max_n(std::size_t d);

struct SlopeEntry {
  unsigned n = 0;
  /// pmax(S^n(E^dual)) / n
  LogValue pmax_over_n;
  /// pmin(S^n(E^dual)) / n
  LogValue pmin_over_n;
  bool certified = false;
};

struct SlopeSequence {
  std::vector<SlopeEntry> entries;
  /// Set when a dimension cap or resource limit stopped the sequence early.
  bool truncated = false;
  std::string warning;
};

/// Entries n = 1..max_n. Both extremal slopes are read off one HN polygon.
SlopeSequence slope_sequence(const EuclideanLattice& e, unsigned max_n, const SearchLimits& limits = {});

enum class DefectKind { Alpha, AlphaStrong };

struct DefectValue {
  unsigned n = 0;
  LogValue value;
  Ordering vs_zero = Ordering::Equal;
  /// Comparison with H_{d-1}.
  Ordering vs_upper = Ordering::Equal;
  bool certified = false;
};

struct DefectEstimate {
  DefectKind kind = DefectKind::Alpha;
  std::vector<DefectValue> values;
  /// Reference bounds: 1/2 ln d below and H_{d-1} above for the limit.
  LogValue reference_lower;
  Rational reference_upper;
  bool truncated = false;
};

/// alpha_n = (pmax(S^n E^dual) - n pmax(E^dual)) / n and
/// alpha_s,n = (pmax(S^n E^dual) - pmax((S^n E)^dual)) / n.
std::pair<DefectEstimate, DefectEstimate> defect_estimates(const EuclideanLattice& e, unsigned max_n,
                                                           const SearchLimits& limits = {});

enum class ZetaStatus { Certified, Bounded, Unknown };

std::string to_string(ZetaStatus s);

/// Sandwich for the i-th Zhang minimum. [lower, upper] is [-mu_hat_i, lambda_i(Q)].
/// zeta_upper is a proven upper bound for zeta_i: min(lambda_1, lower + H_{d-1})
/// for i = 1 and lower + H_{d-1} otherwise.
struct SandwichCertificate {
  std::size_t index = 0;
  LogValue lower;
  LogValue upper;
  bool tight = false;
  Quantity zeta_upper;
  ZetaStatus status = ZetaStatus::Unknown;
};

std::vector<SandwichCertificate> zeta_sandwich(const EuclideanLattice& e, const SearchLimits& limits = {});

struct TransferenceEntry {
  std::size_t index = 0;
  /// lambda_i(E) + lambda_{d+1-i}(E^dual)
  LogValue lambda_sum;
  Ordering vs_zero = Ordering::Equal;
  Ordering vs_ln_d = Ordering::Equal;
  /// H_{i-1} + H_{d-i}
  Rational harmonic_bound;
  Ordering lambda_vs_harmonic = Ordering::Equal;
  /// (-mu_hat_i(E)) + (-mu_hat_{d+1-i}(E^dual))
  LogValue slope_sum;
  Ordering slope_vs_harmonic = Ordering::Equal;
  /// lambda_sum in [0, ln d] and slope_sum <= harmonic_bound.
  bool ok = false;
};

struct TransferenceReport {
  std::vector<TransferenceEntry> entries;
  bool certified = false;
  bool all_ok = false;
};

TransferenceReport transference_check(const EuclideanLattice& e, const SearchLimits& limits = {});

}  // namespace adelic::asymptotics
