#include "adelic/ffbundles/polynomial.hpp"

#include <cctype>

#include "adelic/core/errors.hpp"
#include "adelic/exactlog/factor.hpp"

namespace adelic::ffbundles {

Field Field::prime(unsigned long p) {
  if (!exactlog::is_prime(Integer(p))) throw ValidationError("GF(" + std::to_string(p) + "): modulus is not prime");
  return Field(p);
}

Field Field::parse(std::string_view name) {
  if (name == "Q" || name == "QQ") return rationals();
  if (name.size() > 4 && name.substr(0, 3) == "GF(" && name.back() == ')') {
    const std::string digits(name.substr(3, name.size() - 4));
    if (digits.empty() || digits.size() > 9) throw ValidationError("unsupported field '" + std::string(name) + "'");
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ValidationError("bad field '" + std::string(name) + "'");
    return prime(std::stoul(digits));
  }
  throw ValidationError("unknown field '" + std::string(name) + "'");
}

Rational Field::normalize(const Rational& x) const {
  if (p_ == 0) return x;
  const Integer p(p_);
  Integer den = x.get_den() % p;
  if (den == 0) throw DomainError("denominator not invertible in " + name());
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  Integer v = x.get_num() * inv;
  mpz_mod(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return Rational(v);
}

Rational Field::inverse(const Rational& x) const {
  const Rational n = normalize(x);
  if (n == 0) throw DomainError("inverse of zero");
  if (p_ == 0) return Rational(1) / n;
  return normalize(Rational(Integer(1), n.get_num()));
}

std::string Field::name() const { return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")"; }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c, const Field& f) { return monomial(c, 0, f); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree, const Field& f) {
  Polynomial p;
  const Rational v = f.normalize(c);
  if (v == 0) return p;
  p.coeffs_.assign(degree + 1, Rational(0));
  p.coeffs_[degree] = v;
  return p;
}

namespace {

class TermParser {
 public:
  TermParser(std::string_view s, const Field& f) : s_(s), f_(f) {}

  Polynomial parse() {
    Polynomial acc;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      acc = acc.add(term(sign), f_);
      skip_ws();
    }
    return acc;
  }

 private:
  Polynomial term(int sign) {
    Rational coeff(sign);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff *= number();
      have_coeff = true;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        const Rational den = number();
        if (den == 0) fail("zero denominator");
        coeff /= den;
        skip_ws();
      }
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 'T') fail("expected T after '*'");
      }
    }
    std::size_t exponent = 0;
    if (peek() == 'T') {
      ++pos_;
      exponent = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        const Rational e = number();
        if (e > 100000) fail("exponent too large");
        exponent = e.get_num().get_ui();
      }
    } else if (!have_coeff) {
      fail("expected a coefficient or T");
    }
    return Polynomial::monomial(coeff, exponent, f_);
  }

  Rational number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Rational(Integer(std::string(s_.substr(start, pos_ - start))));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw ValidationError("polynomial '" + std::string(s_) + "': " + why);
  }

  std::string_view s_;
  const Field& f_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, const Field& f) { return TermParser(text, f).parse(); }

Polynomial Polynomial::normalized(const Field& f) const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = f.normalize(c);
  r.trim();
  return r;
}

Polynomial Polynomial::add(const Polynomial& o, const Field& f) const {
  Polynomial r;
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = f.normalize(coeff(i) + o.coeff(i));
  r.trim();
  return r;
}

Polynomial Polynomial::sub(const Polynomial& o, const Field& f) const {
  Polynomial r;
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = f.normalize(coeff(i) - o.coeff(i));
  r.trim();
  return r;
}

Polynomial Polynomial::mul(const Polynomial& o, const Field& f) const {
  Polynomial r;
  if (is_zero() || o.is_zero()) return r;
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  for (auto& c : r.coeffs_) c = f.normalize(c);
  r.trim();
  return r;
}

Polynomial Polynomial::sub_scaled_shift(const Polynomial& o, const Rational& c, std::size_t shift,
                                        const Field& f) const {
  Polynomial r = *this;
  if (o.is_zero()) return r;
  if (r.coeffs_.size() < o.coeffs_.size() + shift) r.coeffs_.resize(o.coeffs_.size() + shift, Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    r.coeffs_[i + shift] = f.normalize(r.coeffs_[i + shift] - c * o.coeffs_[i]);
  r.trim();
  return r;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (k == 0) {
      out += adelic::to_string(mag);
      continue;
    }
    if (mag != 1) out += adelic::to_string(mag) + "*";
    out += "T";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, const Field& f) {
  const std::size_t n = a.size();
  const std::size_t m = b.empty() ? 0 : b[0].size();
  PolyMatrix c(n, std::vector<Polynomial>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] = c[i][j].add(a[i][k].mul(b[k][j], f), f);
    }
  return c;
}

}  // namespace adelic::ffbundles
