#pragma once

#include "adelic/exactlog/log_value.hpp"

namespace adelic::exactlog {

enum class Ordering { Less, Equal, Greater };

/// Enclosure [lo, hi] of a real number. Endpoints are dyadic rationals
/// produced by directed-rounding MPFR evaluation at `precision` bits.
struct LogInterval {
  Rational lo;
  Rational hi;
  unsigned long precision = 0;

  Rational midpoint() const { return (lo + hi) / 2; }
  Rational width() const { return hi - lo; }
};

/// Encloses r + sum c_p ln p at the given working precision.
LogInterval enclose(const Quantity& q, unsigned long precision);

/// Bit cap for refinement: ADELIC_PRECISION_CAP if set and valid, else 16384.
unsigned long precision_cap();

/// Exact trichotomy. Equality is symbolic (r + L = 0 iff r = 0 and L = 0);
/// strict cases are decided by interval refinement from 64 bits, doubling
/// until separation. Throws PrecisionExhausted past the cap.
Ordering compare(const Quantity& a, const Quantity& b);
Ordering compare(const LogValue& a, const Rational& r);
Ordering compare_values(const LogValue& a, const LogValue& b);

/// Sign of a quantity as -1, 0, +1.
int sign(const Quantity& q);

bool less(const Quantity& a, const Quantity& b);
bool less_equal(const Quantity& a, const Quantity& b);

/// Double approximation: midpoint of the 128-bit enclosure.
double to_double(const Quantity& q);

}  // namespace adelic::exactlog
