#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "adelic/core/errors.hpp"
#include "adelic/exactlog/compare.hpp"
#include "adelic/exactlog/factor.hpp"

using namespace adelic;
using namespace adelic::exactlog;

namespace {
LogValue ln(long q) { return LogValue::of_rational(Rational(q)); }
Rational q(long a, long b = 1) { return make_rational(a, b); }
}  // namespace

TEST_SUITE("exactlog") {
  TEST_CASE("factorization is exact and canonical") {
    const Factorization f = factor(Integer(360));
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::make_pair(Integer(2), 3UL));
    CHECK(f[1] == std::make_pair(Integer(3), 2UL));
    CHECK(f[2] == std::make_pair(Integer(5), 1UL));
    const Integer big = Integer("1000000007") * Integer("998244353");
    const Factorization g = factor(big);
    REQUIRE(g.size() == 2);
    CHECK(g[0].first == Integer("998244353"));
    CHECK(is_prime(Integer(97)));
    CHECK_FALSE(is_prime(Integer(91)));
  }

  TEST_CASE("log of rationals") {
    CHECK(log_of_rational(q(1)).is_zero());
    CHECK(scalar_mul(q(1, 2), log_of_rational(q(4))) == ln(2));
    const LogValue v = log_of_rational(q(9, 4));
    REQUIRE(v.terms().size() == 2);
    CHECK(v.terms().at(Integer(3)) == 2);
    CHECK(v.terms().at(Integer(2)) == -2);
    CHECK(v.exp_rational() == q(9, 4));
    CHECK_THROWS_AS(log_of_rational(q(0)), DomainError);
    CHECK_THROWS_AS(log_of_rational(q(-3, 2)), DomainError);
  }

  TEST_CASE("canonical form drops zero exponents and rejects composite keys") {
    LogValue::Terms t;
    t[Integer(2)] = 0;
    t[Integer(5)] = q(1, 3);
    const LogValue v = LogValue::from_terms(t);
    CHECK(v.terms().size() == 1);
    LogValue::Terms bad;
    bad[Integer(6)] = 1;
    CHECK_THROWS_AS(LogValue::from_terms(bad), ValidationError);
  }

  TEST_CASE("add and scalar_mul") {
    CHECK(add(scalar_mul(q(1, 2), log_of_rational(q(9, 4))), scalar_mul(q(1, 2), ln(4))) == ln(3));
    CHECK(scalar_mul(q(1, 3), ln(8)) == ln(2));
    const LogValue a = ln(12) - q(2, 7) * ln(5);
    CHECK(add(a, scalar_mul(q(-1), a)).is_zero());
    CHECK(to_string(q(1, 2) * ln(2) - ln(3)) == "1/2 ln 2 - ln 3");
    CHECK(to_string(LogValue()) == "0");
  }

  TEST_CASE("compare against rationals") {
    CHECK(compare(LogValue(), q(0)) == Ordering::Equal);
    CHECK(compare(ln(2), q(0)) == Ordering::Greater);
    CHECK(compare(ln(6), harmonic(5)) == Ordering::Less);
    CHECK(harmonic(5) == q(137, 60));
    CHECK(compare(ln(3), q(1)) == Ordering::Greater);
    CHECK(compare(q(-1) * ln(3), q(-1)) == Ordering::Less);
  }

  TEST_CASE("compare_values") {
    CHECK(compare_values(ln(2) + ln(3), ln(6)) == Ordering::Equal);
    CHECK(compare_values(ln(2), ln(3)) == Ordering::Less);
    CHECK(compare_values(q(1, 2) * ln(2), q(1, 3) * ln(3)) == Ordering::Less);
    // 2^10 = 1024 > 1000 = 10^3: close values need refinement
    CHECK(compare_values(q(1, 3) * ln(2), q(1, 10) * ln(10)) == Ordering::Greater);
  }

  TEST_CASE("enclosures contain the value and shrink with precision") {
    const Quantity x(q(1, 3), ln(7) - q(1, 2) * ln(2));
    const LogInterval lo = enclose(x, 64);
    const LogInterval hi = enclose(x, 256);
    CHECK(lo.lo <= hi.lo);
    CHECK(hi.hi <= lo.hi);
    CHECK(hi.width() < lo.width());
    const double approx = 1.0 / 3 + std::log(7.0) - 0.5 * std::log(2.0);
    CHECK(to_double(x) == doctest::Approx(approx).epsilon(1e-15));
  }

  TEST_CASE("float rendering matches the 128-bit midpoint to 2^-48 relative") {
    const Quantity x(q(-5, 7), q(3, 5) * ln(11) + q(1, 9) * ln(13));
    const LogInterval iv = enclose(x, 128);
    const double mid = iv.midpoint().get_d();
    CHECK(std::abs(to_double(x) - mid) <= std::ldexp(std::abs(mid), -48));
  }

  TEST_CASE("precision cap is honored") {
    ::setenv("ADELIC_PRECISION_CAP", "4096", 1);
    CHECK(precision_cap() == 4096);
    ::setenv("ADELIC_PRECISION_CAP", "not-a-number", 1);
    CHECK(precision_cap() == 16384);
    ::unsetenv("ADELIC_PRECISION_CAP");
    CHECK(precision_cap() == 16384);
  }

  TEST_CASE("sign of mixed quantities") {
    CHECK(sign(Quantity()) == 0);
    CHECK(sign(Quantity(q(-1), ln(3))) == 1);
    CHECK(sign(Quantity(q(-6, 5), ln(3))) == -1);
    CHECK(less(Quantity(ln(2)), Quantity(q(7, 10))));
  }
}
