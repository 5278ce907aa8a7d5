#include "adelic/multilinear/multilinear.hpp"

#include <cstdint>
#include <string>

#include "adelic/core/errors.hpp"

namespace adelic::multilinear {

namespace {

void check_cap(const Integer& dim, std::size_t cap, const char* what) {
  if (dim > Integer(static_cast<unsigned long>(cap))) {
    throw ResourceError(std::string(what) + " dimension " + dim.get_str() + " exceeds cap " + std::to_string(cap));
  }
}

void monomials_rec(std::size_t pos, unsigned left, Exponent& cur, std::vector<Exponent>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  for (unsigned k = left + 1; k-- > 0;) {
    cur[pos] = k;
    monomials_rec(pos + 1, left - k, cur, out);
  }
}

std::vector<std::size_t> expand(const Exponent& k) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < k.size(); ++i)
    for (unsigned t = 0; t < k[i]; ++t) idx.push_back(i);
  return idx;
}

}  // namespace

std::vector<Exponent> monomials(std::size_t d, unsigned n) {
  std::vector<Exponent> out;
  if (d == 0) return out;
  Exponent cur(d, 0);
  monomials_rec(0, n, cur, out);
  return out;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t d, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r > d) return out;
  std::vector<std::size_t> s(r);
  for (std::size_t i = 0; i < r; ++i) s[i] = i;
  for (;;) {
    out.push_back(s);
    // Colex successor: bump the first element that can move, reset the prefix.
    std::size_t i = 0;
    while (i < r && ((i + 1 < r) ? s[i] + 1 == s[i + 1] : s[i] + 1 == d)) ++i;
    if (i == r) break;
    ++s[i];
    for (std::size_t j = 0; j < i; ++j) s[j] = j;
  }
  return out;
}

Rational permanent(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  Rational total(0);
  const std::uint64_t count = std::uint64_t{1} << n;
  RationalVector row_sums(n);
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    for (std::size_t i = 0; i < n; ++i) {
      row_sums[i] = 0;
      for (std::size_t j = 0; j < n; ++j)
        if ((mask >> j) & 1U) row_sums[i] += m(i, j);
    }
    Rational prod(1);
    for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= row_sums[i];
    const int bits = __builtin_popcountll(mask);
    if ((static_cast<int>(n) - bits) % 2 == 0) {
      total += prod;
    } else {
      total -= prod;
    }
  }
  return total;
}

Rational kronecker_entry(const RationalMatrix& a, const RationalMatrix& b, std::size_t i, std::size_t j) {
  return a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
}

EuclideanLattice tensor(const EuclideanLattice& a, const EuclideanLattice& b, std::size_t cap) {
  const std::size_t n = a.dim() * b.dim();
  check_cap(Integer(static_cast<unsigned long>(n)), cap, "tensor");
  RationalMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = kronecker_entry(a.gram(), b.gram(), i, j);
  return EuclideanLattice(std::move(g));
}

Rational diagonal_sym_entry(const RationalVector& q, const Exponent& k) {
  Rational v(1);
  unsigned n = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    for (unsigned t = 0; t < k[i]; ++t) v *= q[i];
    v *= factorial(k[i]);
    n += k[i];
  }
  return v / factorial(n);
}

RationalMatrix permanent_sym_gram(const RationalMatrix& gram, unsigned n) {
  const std::vector<Exponent> basis = monomials(gram.rows(), n);
  const std::size_t m = basis.size();
  RationalMatrix g(m, m);
  const Rational inv_fact = Rational(1) / Rational(factorial(n));
  std::vector<std::vector<std::size_t>> expanded;
  for (const auto& k : basis) expanded.push_back(expand(k));
  RationalMatrix inner(n, n);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inner(i, j) = gram(expanded[a][i], expanded[b][j]);
      g(a, b) = permanent(inner) * inv_fact;
      g(b, a) = g(a, b);
    }
  }
  return g;
}

EuclideanLattice sym_power(const EuclideanLattice& e, unsigned n, std::size_t cap) {
  if (n == 0) throw DomainError("symmetric power exponent must be positive");
  const std::size_t d = e.dim();
  check_cap(binomial(static_cast<unsigned>(n + d - 1), static_cast<unsigned>(d - 1)), cap, "symmetric power");
  const std::vector<Exponent> basis = monomials(d, n);
  const std::size_t m = basis.size();
  RationalMatrix g(m, m);
  if (e.is_diagonal()) {
    RationalVector q(d);
    for (std::size_t i = 0; i < d; ++i) q[i] = e.gram()(i, i);
    for (std::size_t a = 0; a < m; ++a) g(a, a) = diagonal_sym_entry(q, basis[a]);
    return EuclideanLattice(std::move(g));
  }
  return EuclideanLattice(permanent_sym_gram(e.gram(), n));
}

EuclideanLattice wedge_power(const EuclideanLattice& e, std::size_t r, std::size_t cap) {
  const std::size_t d = e.dim();
  if (r == 0 || r > d) throw DomainError("wedge power rank must lie in 1..d");
  check_cap(binomial(static_cast<unsigned>(d), static_cast<unsigned>(r)), cap, "wedge power");
  const auto sets = subsets(d, r);
  const std::size_t m = sets.size();
  RationalMatrix g(m, m);
  RationalMatrix minor(r, r);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) minor(i, j) = e.gram()(sets[a][i], sets[b][j]);
      g(a, b) = determinant(minor);
      g(b, a) = g(a, b);
    }
  }
  return EuclideanLattice(std::move(g));
}

EuclideanLattice sym_of_dual(const EuclideanLattice& e, unsigned n, std::size_t cap) {
  return sym_power(lattices::dual(e), n, cap);
}

EuclideanLattice dual_of_sym(const EuclideanLattice& e, unsigned n, std::size_t cap) {
  return lattices::dual(sym_power(e, n, cap));
}

}  // namespace adelic::multilinear
