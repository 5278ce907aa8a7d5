#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "adelic/core/rational.hpp"

namespace adelic::ffbundles {

/// Coefficient field: Q when characteristic() == 0, otherwise GF(p).
/// Elements are stored as rationals; in GF(p) they are integers in [0, p).
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(unsigned long p);
  /// "Q", "QQ" or "GF(p)".
  static Field parse(std::string_view name);

  unsigned long characteristic() const noexcept { return p_; }
  Rational normalize(const Rational& x) const;
  Rational inverse(const Rational& x) const;
  std::string name() const;

  bool operator==(const Field& o) const { return p_ == o.p_; }

 private:
  explicit Field(unsigned long p) : p_(p) {}
  unsigned long p_;
};

/// Dense univariate polynomial in T; coeffs[i] multiplies T^i, no trailing
/// zeros. All arithmetic is relative to a Field.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial constant(const Rational& c, const Field& f);
  static Polynomial monomial(const Rational& c, std::size_t degree, const Field& f);
  /// Parses sums of terms like "3/2*T^2 - T + 4" (also "2T", "T^3", "-1").
  static Polynomial parse(std::string_view text, const Field& f);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  /// Coefficients reduced into the field (a no-op over Q).
  Polynomial normalized(const Field& f) const;
  Polynomial add(const Polynomial& o, const Field& f) const;
  Polynomial sub(const Polynomial& o, const Field& f) const;
  Polynomial mul(const Polynomial& o, const Field& f) const;
  /// this - c * T^shift * o
  Polynomial sub_scaled_shift(const Polynomial& o, const Rational& c, std::size_t shift, const Field& f) const;

  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

using PolyMatrix = std::vector<std::vector<Polynomial>>;

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, const Field& f);

}  // namespace adelic::ffbundles
