#include <doctest.h>

#include <random>

#include "../support/fixtures.hpp"
#include "adelic/asymptotics/asymptotics.hpp"
#include "adelic/lattices/minima.hpp"
#include "adelic/lattices/slopes.hpp"

using namespace adelic;
using namespace adelic::asymptotics;

namespace {
LogValue ln(long x) { return LogValue::of_rational(Rational(x)); }
Rational q(long a, long b = 1) { return make_rational(a, b); }
LogValue closed_form_std2(unsigned n) {
  return make_rational(1, 2 * static_cast<long>(n)) * LogValue::of_rational(Rational(binomial(n, n / 2)));
}
}  // namespace

TEST_SUITE("asymptotics") {
  TEST_CASE("default prefix lengths") {
    CHECK(default_max_n(1) == 8);
    CHECK(default_max_n(2) == 8);
    CHECK(default_max_n(3) == 4);
    CHECK(default_max_n(4) == 2);
    CHECK(default_max_n(7) == 1);
  }

  TEST_CASE("standard d=2 sequence follows the central binomial closed form") {
    const SlopeSequence seq = slope_sequence(EuclideanLattice::identity(2), 8);
    REQUIRE(seq.entries.size() == 8);
    CHECK_FALSE(seq.truncated);
    for (const auto& e : seq.entries) {
      CHECK(e.certified);
      CHECK(e.pmax_over_n == closed_form_std2(e.n));
    }
    CHECK(seq.entries[1].pmax_over_n == q(1, 4) * ln(2));
    CHECK(seq.entries[3].pmax_over_n == q(1, 8) * ln(6));
  }

  TEST_CASE("rank one and diagonal sequences") {
    const SlopeSequence one = slope_sequence(EuclideanLattice::diagonal({q(5, 3)}), 5);
    for (const auto& e : one.entries) CHECK(e.pmax_over_n == q(1, 2) * LogValue::of_rational(q(5, 3)));
    const SlopeSequence d49 = slope_sequence(EuclideanLattice::diagonal({q(4), q(9)}), 1);
    CHECK(d49.entries[0].pmax_over_n == ln(3));
  }

  TEST_CASE("sequence truncates at the dimension cap") {
    SearchLimits lim;
    lim.dimension_cap = 4;
    const SlopeSequence seq = slope_sequence(EuclideanLattice::identity(2), 6, lim);
    CHECK(seq.truncated);
    CHECK(seq.entries.size() == 3);
    CHECK_FALSE(seq.warning.empty());
  }

  TEST_CASE("superadditivity on diagonal lattices") {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 5; ++t) {
      const EuclideanLattice e = EuclideanLattice::diagonal(fixtures::random_diagonal(rng, 2));
      const SlopeSequence seq = slope_sequence(e, 6);
      auto total = [&](unsigned n) { return Rational(static_cast<long>(n)) * seq.entries[n - 1].pmax_over_n; };
      for (unsigned n = 1; n <= 3; ++n)
        for (unsigned m = 1; n + m <= 6; ++m)
          CHECK(exactlog::compare_values(total(n + m), total(n) + total(m)) != Ordering::Less);
    }
  }

  TEST_CASE("defects") {
    const auto [alpha, alpha_s] = defect_estimates(EuclideanLattice::identity(2), 6);
    CHECK(alpha.reference_lower == q(1, 2) * ln(2));
    CHECK(alpha.reference_upper == 1);
    REQUIRE(alpha.values.size() == 6);
    for (const auto& v : alpha.values) {
      CHECK(v.value == closed_form_std2(v.n));
      CHECK(v.vs_zero != Ordering::Less);
    }
    const auto [a1, as1] = defect_estimates(EuclideanLattice::diagonal({q(7)}), 4);
    for (const auto& v : a1.values) CHECK(v.value.is_zero());
    for (const auto& v : as1.values) CHECK(v.value.is_zero());
  }

  TEST_CASE("diagonal defects match closed forms") {
    // For a diagonal lattice the maximal slope is -1/2 ln of the smallest diagonal entry.
    const RationalVector d{q(2), q(3)};
    const EuclideanLattice e = EuclideanLattice::diagonal(d);
    const auto [alpha, alpha_s] = defect_estimates(e, 4);
    for (const auto& v : alpha.values) {
      const unsigned n = v.n;
      Rational smallest = -1;
      for (unsigned k = 0; k <= n; ++k) {
        Rational entry = Rational(factorial(k) * factorial(n - k)) / Rational(factorial(n));
        for (unsigned i = 0; i < k; ++i) entry /= d[0];
        for (unsigned i = k; i < n; ++i) entry /= d[1];
        if (smallest < 0 || entry < smallest) smallest = entry;
      }
      const LogValue top = q(-1, 2) * LogValue::of_rational(smallest);
      const LogValue pmax_dual = q(1, 2) * ln(3);
      CHECK(v.value == make_rational(1, static_cast<long>(n)) * (top - Rational(static_cast<long>(n)) * pmax_dual));
    }
  }

  TEST_CASE("zeta sandwich") {
    const auto d49 = zeta_sandwich(EuclideanLattice::diagonal({q(4), q(9)}));
    CHECK(d49[0].lower == ln(2));
    CHECK(d49[0].upper == ln(2));
    CHECK(d49[0].tight);
    CHECK(d49[0].status == ZetaStatus::Certified);
    CHECK(d49[1].tight);
    CHECK(d49[1].status == ZetaStatus::Bounded);
    CHECK(d49[1].zeta_upper == Quantity(q(1), ln(3)));
    for (const auto& c : zeta_sandwich(EuclideanLattice::identity(3))) {
      CHECK(c.lower.is_zero());
      CHECK(c.upper.is_zero());
      CHECK(c.tight);
    }
    const auto hex = zeta_sandwich(EuclideanLattice(RationalMatrix{{q(2), q(1)}, {q(1), q(2)}}));
    CHECK(hex[0].lower == q(1, 4) * ln(3));
    CHECK(hex[0].upper == q(1, 2) * ln(2));
    CHECK_FALSE(hex[0].tight);
    CHECK(hex[0].status == ZetaStatus::Bounded);
    CHECK(to_string(ZetaStatus::Unknown) == "unknown");
  }

  TEST_CASE("monotone sandwich on random lattices") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 60; ++t) {
      const EuclideanLattice e = fixtures::random_lattice(rng, 1 + t % 3);
      for (const auto& c : zeta_sandwich(e)) {
        CHECK(exactlog::compare_values(c.lower, c.upper) != Ordering::Greater);
        CHECK(exactlog::less_equal(Quantity(c.lower), c.zeta_upper));
      }
    }
  }

  TEST_CASE("transference") {
    const TransferenceReport r = transference_check(EuclideanLattice::diagonal({q(4), q(9)}));
    REQUIRE(r.entries.size() == 2);
    CHECK(r.entries[0].lambda_sum.is_zero());
    CHECK(r.entries[0].vs_ln_d == Ordering::Less);
    CHECK(r.entries[0].slope_sum.is_zero());
    CHECK(r.entries[0].harmonic_bound == 1);
    CHECK(r.all_ok);
    const TransferenceReport id = transference_check(EuclideanLattice::identity(3));
    for (const auto& e : id.entries) CHECK(e.lambda_sum.is_zero());
    CHECK(id.all_ok);
  }
}
