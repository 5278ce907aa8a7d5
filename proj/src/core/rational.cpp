#include "adelic/core/rational.hpp"

#include <string>

#include "adelic/core/errors.hpp"

namespace adelic {

namespace {

bool valid_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!valid_integer_literal(s)) {
    throw ValidationError("malformed integer literal '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  Integer num = parse_integer(trim(text.substr(0, slash)));
  Integer den = parse_integer(trim(text.substr(slash + 1)));
  if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer binomial(unsigned n, unsigned k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

Rational harmonic(unsigned n) {
  Rational h(0);
  for (unsigned k = 1; k <= n; ++k) h += Rational(1, k);
  h.canonicalize();
  return h;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer round_of(const Rational& q) { return floor_of(q + Rational(1, 2)); }

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

Rational determinant(const RationalMatrix& input) {
  if (!input.is_square()) throw DomainError("determinant of non-square matrix");
  RationalMatrix m = input;
  const std::size_t n = m.rows();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m(pivot, c) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != c) {
      m.swap_rows(pivot, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

Integer determinant(const IntMatrix& m) {
  // Bareiss fraction-free elimination.
  if (!m.is_square()) throw DomainError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Integer(1);
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return Integer(0);
      a.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

RationalMatrix inverse(const RationalMatrix& input) {
  if (!input.is_square()) throw DomainError("inverse of non-square matrix");
  const std::size_t n = input.rows();
  RationalMatrix a = input;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c) == 0) ++pivot;
    if (pivot == n) throw DomainError("matrix is singular");
    a.swap_rows(pivot, c);
    inv.swap_rows(pivot, c);
    const Rational p = a(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      a(c, k) /= p;
      inv(c, k) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Rational f = a(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        a(r, k) -= f * a(c, k);
        inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

std::size_t rank(const RationalMatrix& input) {
  RationalMatrix m = input;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
    }
    ++r;
  }
  return r;
}

Rational bilinear(const RationalMatrix& gram, const IntVector& x, const IntVector& y) {
  Rational s(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Rational row(0);
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] != 0) row += gram(i, j) * y[j];
    }
    s += row * x[i];
  }
  return s;
}

Rational quadratic_form(const RationalMatrix& gram, const IntVector& x) {
  return bilinear(gram, x, x);
}

Rational quadratic_form(const RationalMatrix& gram, const RationalVector& x) {
  Rational s(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < x.size(); ++j) s += x[i] * gram(i, j) * x[j];
  }
  return s;
}

RationalMatrix restrict_gram(const RationalMatrix& gram, const IntMatrix& basis) {
  const std::size_t r = basis.rows();
  RationalMatrix out(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    const IntVector bi = basis.row(i);
    for (std::size_t j = i; j < r; ++j) {
      out(i, j) = bilinear(gram, bi, basis.row(j));
      out(j, i) = out(i, j);
    }
  }
  return out;
}

bool is_symmetric_positive_definite(const RationalMatrix& m) {
  if (!m.is_square()) return false;
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m(i, j) != m(j, i)) return false;
  // Symmetric Gaussian elimination without pivoting: all pivots positive
  // iff all leading principal minors positive.
  RationalMatrix a = m;
  for (std::size_t c = 0; c < n; ++c) {
    if (a(c, c) <= 0) return false;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      const Rational f = a(r, c) / a(c, c);
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return true;
}

}  // namespace adelic
