#include "adelic/lattices/lll.hpp"

#include "adelic/core/errors.hpp"

namespace adelic::lattices {

GramSchmidt gram_schmidt(const RationalMatrix& gram) {
  const std::size_t n = gram.rows();
  GramSchmidt gs{RationalMatrix(n, n), RationalVector(n)};
  RationalMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Rational v = gram(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= gs.mu(j, k) * r(i, k);
      r(i, j) = v;
      if (j < i) gs.mu(i, j) = v / gs.b[j];
    }
    gs.b[i] = r(i, i);
    if (gs.b[i] <= 0) throw DomainError("gram matrix is not positive definite");
    gs.mu(i, i) = 1;
  }
  return gs;
}

namespace {

// b_k -= q b_l, applied to both the transform and the Gram matrix.
void reduce_row(IntMatrix& t, RationalMatrix& g, std::size_t k, std::size_t l, const Integer& q) {
  const std::size_t n = g.rows();
  for (std::size_t c = 0; c < t.cols(); ++c) t(k, c) -= q * t(l, c);
  const Rational qq(q);
  const Rational gll = g(l, l);
  const Rational gkl = g(k, l);
  for (std::size_t c = 0; c < n; ++c) {
    if (c == k) continue;
    g(k, c) -= qq * g(l, c);
    g(c, k) = g(k, c);
  }
  g(k, k) = g(k, k) - 2 * qq * gkl + qq * qq * gll;
}

void swap_basis(IntMatrix& t, RationalMatrix& g, std::size_t a, std::size_t b) {
  t.swap_rows(a, b);
  g.swap_rows(a, b);
  for (std::size_t r = 0; r < g.rows(); ++r) std::swap(g(r, a), g(r, b));
}

}  // namespace

LllResult lll_reduce(const RationalMatrix& gram, const Rational& delta) {
  const std::size_t n = gram.rows();
  LllResult res{IntMatrix::identity(n), gram};
  if (n <= 1) return res;
  GramSchmidt gs = gram_schmidt(res.gram);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t jj = k; jj-- > 0;) {
      const Rational& m = gs.mu(k, jj);
      if (abs(m) <= Rational(1, 2)) continue;
      const Integer q = round_of(m);
      reduce_row(res.transform, res.gram, k, jj, q);
      for (std::size_t j = 0; j < jj; ++j) gs.mu(k, j) -= Rational(q) * gs.mu(jj, j);
      gs.mu(k, jj) -= Rational(q);
    }
    const Rational& m = gs.mu(k, k - 1);
    if (gs.b[k] >= (delta - m * m) * gs.b[k - 1]) {
      ++k;
    } else {
      swap_basis(res.transform, res.gram, k, k - 1);
      gs = gram_schmidt(res.gram);
      k = k > 1 ? k - 1 : 1;
    }
  }
  return res;
}

IntMatrix lll_reduce_basis(const RationalMatrix& gram, const IntMatrix& basis) {
  const LllResult sub = lll_reduce(restrict_gram(gram, basis));
  return sub.transform * basis;
}

}  // namespace adelic::lattices
