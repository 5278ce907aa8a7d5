#include "adelic/lattices/integer_linalg.hpp"

#include "adelic/core/errors.hpp"

namespace adelic::lattices {

namespace {

void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& input) {
  IntMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Fold every lower row into row r with unimodular 2x2 transforms.
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      if (m(r, c) == 0) {
        m.swap_rows(r, i);
        continue;
      }
      Integer g, s, t;
      extended_gcd(m(r, c), m(i, c), g, s, t);
      const Integer a = m(r, c) / g;
      const Integer b = m(i, c) / g;
      for (std::size_t k = c; k < cols; ++k) {
        const Integer top = s * m(r, k) + t * m(i, k);
        const Integer bottom = -b * m(r, k) + a * m(i, k);
        m(r, k) = top;
        m(i, k) = bottom;
      }
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0) {
      for (std::size_t k = c; k < cols; ++k) m(r, k) = -m(r, k);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Integer q = floor_div(m(i, c), m(r, c));
      if (q == 0) continue;
      for (std::size_t k = c; k < cols; ++k) m(i, k) -= q * m(r, k);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  IntMatrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < cols; ++k) out(i, k) = m(i, k);
  return out;
}

Saturation saturate(const IntMatrix& rows) {
  // Column operations B V = [H | 0] with V unimodular, tracked as W = V^{-1}
  // so that B = H * (top r rows of W). Those rows extend to a unimodular
  // matrix, hence are a basis of the saturation, and the index is |det H|.
  const std::size_t r = rows.rows();
  const std::size_t d = rows.cols();
  if (r > d) throw DomainError("more generators than ambient dimension");
  IntMatrix b = rows;
  IntMatrix w = IntMatrix::identity(d);

  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < r; ++k) std::swap(b(k, i), b(k, j));
    w.swap_rows(i, j);
  };
  // col_j += f * col_i  <=>  row_i(W) -= f * row_j(W)
  auto add_col = [&](std::size_t j, std::size_t i, const Integer& f) {
    if (f == 0) return;
    for (std::size_t k = 0; k < r; ++k) b(k, j) += f * b(k, i);
    for (std::size_t k = 0; k < d; ++k) w(i, k) -= f * w(j, k);
  };

  for (std::size_t t = 0; t < r; ++t) {
    for (;;) {
      std::size_t best = d;
      for (std::size_t c = t; c < d; ++c) {
        if (b(t, c) == 0) continue;
        if (best == d || cmp(abs(b(t, c)), abs(b(t, best))) < 0) best = c;
      }
      if (best == d) throw DomainError("generators are linearly dependent");
      swap_cols(t, best);
      bool done = true;
      for (std::size_t c = t + 1; c < d; ++c) {
        if (b(t, c) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), b(t, c).get_mpz_t(), b(t, t).get_mpz_t());
        add_col(c, t, -q);
        if (b(t, c) != 0) done = false;
      }
      if (done) break;
    }
  }

  Saturation out{IntMatrix(r, d), Integer(1)};
  for (std::size_t i = 0; i < r; ++i) {
    out.index *= b(i, i);
    for (std::size_t k = 0; k < d; ++k) out.basis(i, k) = w(i, k);
  }
  out.index = abs(out.index);
  return out;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntVector primitive_vector(const RationalVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector z(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) z[i] = v[i].get_num() * (l / v[i].get_den());
  const Integer g = content(z);
  if (g == 0) throw DomainError("zero vector has no primitive part");
  for (auto& x : z) x /= g;
  return z;
}

std::size_t integer_rank(const IntMatrix& rows) { return rank(to_rational(rows)); }

IntMatrix append_row(const IntMatrix& a, const IntVector& extra) {
  IntMatrix out(a.rows() + 1, extra.size());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out(i, k) = a(i, k);
  out.set_row(a.rows(), extra);
  return out;
}

}  // namespace adelic::lattices
