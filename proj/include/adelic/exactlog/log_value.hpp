#pragma once

#include <map>
#include <string>

#include "adelic/core/rational.hpp"

namespace adelic::exactlog {

struct IntegerLess {
  bool operator()(const Integer& a, const Integer& b) const { return cmp(a, b) < 0; }
};

/// An element of the Q-span of {ln p : p prime}, stored as a finite map from
/// primes to nonzero rational exponents. Values are immutable once built and
/// always kept in canonical form, so structural equality is value equality.
class LogValue {
 public:
  using Terms = std::map<Integer, Rational, IntegerLess>;

  LogValue() = default;

  /// ln(q) for q > 0; throws DomainError otherwise.
  static LogValue of_rational(const Rational& q);
  /// Builds from an arbitrary map; validates that keys are prime and drops
  /// zero exponents. Throws ValidationError on a non-prime key.
  static LogValue from_terms(const Terms& terms);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// exp(value) as an exact rational when all exponents are integers.
  bool is_log_of_rational() const;
  Rational exp_rational() const;

  LogValue operator-() const;
  LogValue& operator+=(const LogValue& other);
  LogValue& operator-=(const LogValue& other);
  LogValue& operator*=(const Rational& c);

  friend LogValue operator+(LogValue a, const LogValue& b) { return a += b; }
  friend LogValue operator-(LogValue a, const LogValue& b) { return a -= b; }
  friend LogValue operator*(const Rational& c, LogValue a) { return a *= c; }
  friend LogValue operator*(LogValue a, const Rational& c) { return a *= c; }

  bool operator==(const LogValue& other) const { return terms_ == other.terms_; }
  bool operator!=(const LogValue& other) const { return !(*this == other); }

 private:
  void add_term(const Integer& p, const Rational& c);
  Terms terms_;
};

LogValue log_of_rational(const Rational& q);
LogValue add(const LogValue& a, const LogValue& b);
LogValue scalar_mul(const Rational& c, const LogValue& a);

/// Human-readable form such as "1/2 ln 2 - ln 3"; "0" for the zero value.
std::string to_string(const LogValue& v);

/// r + L with r rational and L a LogValue. Harmonic numbers and roof offsets
/// mix the two, and the sum is still exactly comparable.
class Quantity {
 public:
  Quantity() = default;
  Quantity(const Rational& r) : constant_(r) {}  // NOLINT(google-explicit-constructor)
  Quantity(const LogValue& l) : log_(l) {}        // NOLINT(google-explicit-constructor)
  Quantity(const Rational& r, const LogValue& l) : constant_(r), log_(l) {}

  const Rational& constant() const noexcept { return constant_; }
  const LogValue& log_part() const noexcept { return log_; }
  bool is_rational() const noexcept { return log_.is_zero(); }
  bool is_zero() const noexcept { return constant_ == 0 && log_.is_zero(); }

  Quantity operator-() const { return Quantity(-constant_, -log_); }
  Quantity& operator+=(const Quantity& o) {
    constant_ += o.constant_;
    log_ += o.log_;
    return *this;
  }
  Quantity& operator-=(const Quantity& o) {
    constant_ -= o.constant_;
    log_ -= o.log_;
    return *this;
  }
  Quantity& operator*=(const Rational& c) {
    constant_ *= c;
    log_ *= c;
    return *this;
  }
  friend Quantity operator+(Quantity a, const Quantity& b) { return a += b; }
  friend Quantity operator-(Quantity a, const Quantity& b) { return a -= b; }
  friend Quantity operator*(const Rational& c, Quantity a) { return a *= c; }
  friend Quantity operator*(Quantity a, const Rational& c) { return a *= c; }

  bool operator==(const Quantity& o) const { return constant_ == o.constant_ && log_ == o.log_; }
  bool operator!=(const Quantity& o) const { return !(*this == o); }

 private:
  Rational constant_{0};
  LogValue log_;
};

std::string to_string(const Quantity& q);

}  // namespace adelic::exactlog
