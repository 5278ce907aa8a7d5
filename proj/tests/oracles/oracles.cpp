#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace oracle {

using adelic::ffbundles::Field;
using adelic::ffbundles::Polynomial;

namespace {

RationalMatrix minor_of(const RationalMatrix& m, std::size_t skip_row, std::size_t skip_col) {
  const std::size_t n = m.rows();
  RationalMatrix out(n - 1, n - 1);
  for (std::size_t i = 0, r = 0; i < n; ++i) {
    if (i == skip_row) continue;
    for (std::size_t j = 0, c = 0; j < n; ++j) {
      if (j == skip_col) continue;
      out(r, c++) = m(i, j);
    }
    ++r;
  }
  return out;
}

Integer isqrt_floor(const Rational& x) {
  if (x <= 0) return 0;
  const Integer fl = x.get_num() / x.get_den();
  Integer r;
  mpz_sqrt(r.get_mpz_t(), fl.get_mpz_t());
  return r;
}

Rational power(const Rational& base, long e) {
  Rational r(1);
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

// Coefficient vectors over a field, index = degree.
using Coeffs = std::vector<Rational>;

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Coeffs remainder(Coeffs a, const Coeffs& b, const Field& f) {
  const Rational lead_inv = f.inverse(b.back());
  trim(a);
  while (a.size() >= b.size()) {
    const Rational c = f.normalize(a.back() * lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.normalize(a[shift + i] - c * b[i]);
    trim(a);
  }
  return a;
}

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m, const Field& f) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Polynomial acc;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Polynomial>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(std::move(row));
    }
    const Polynomial term = m[0][j].mul(poly_det(sub, f), f);
    acc = (j % 2 == 0) ? acc.add(term, f) : acc.sub(term, f);
  }
  return acc;
}

std::size_t field_rank(std::vector<Coeffs> rows, const Field& f) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = f.inverse(rows[r][c]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational factor = f.normalize(rows[i][c] * inv);
      for (std::size_t k = c; k < cols; ++k) rows[i][k] = f.normalize(rows[i][k] - factor * rows[r][k]);
    }
    ++r;
  }
  return r;
}

}  // namespace

Rational det(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    const Rational term = m(0, j) * det(minor_of(m, 0, j));
    acc += (j % 2 == 0) ? term : Rational(-term);
  }
  return acc;
}

Rational norm(const RationalMatrix& gram, const Vec& x) {
  Rational s(0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x[i] != 0 && x[j] != 0) s += gram(i, j) * x[i] * x[j];
  return s;
}

std::size_t rank(const std::vector<Vec>& rows) {
  std::vector<Coeffs> m;
  for (const auto& r : rows) {
    Coeffs c;
    for (const long v : r) c.push_back(Rational(v));
    m.push_back(std::move(c));
  }
  return field_rank(std::move(m), Field::rationals());
}

std::vector<Vec> box_vectors(const RationalMatrix& gram, const Rational& bound) {
  const std::size_t d = gram.rows();
  const Rational g = det(gram);
  std::vector<long> lim(d);
  for (std::size_t i = 0; i < d; ++i) {
    const Rational inv_ii = det(minor_of(gram, i, i)) / g;
    lim[i] = isqrt_floor(bound * inv_ii).get_si();
  }
  std::vector<Vec> out;
  Vec x(d);
  for (std::size_t i = 0; i < d; ++i) x[i] = -lim[i];
  for (;;) {
    const auto first = std::find_if(x.begin(), x.end(), [](long v) { return v != 0; });
    if (first != x.end() && *first > 0 && norm(gram, x) <= bound) out.push_back(x);
    std::size_t k = 0;
    while (k < d && x[k] == lim[k]) {
      x[k] = -lim[k];
      ++k;
    }
    if (k == d) break;
    ++x[k];
  }
  return out;
}

std::vector<Rational> successive_minima_sq(const RationalMatrix& gram) {
  const std::size_t d = gram.rows();
  Rational bound = gram(0, 0);
  for (std::size_t i = 1; i < d; ++i) bound = std::max(bound, gram(i, i));
  auto vecs = box_vectors(gram, bound);
  std::vector<std::pair<Rational, Vec>> sorted;
  for (auto& v : vecs) sorted.emplace_back(norm(gram, v), std::move(v));
  std::sort(sorted.begin(), sorted.end());
  std::vector<Vec> chosen;
  std::vector<Rational> out;
  for (const auto& [n, v] : sorted) {
    if (out.size() == d) break;
    chosen.push_back(v);
    if (rank(chosen) == chosen.size()) {
      out.push_back(n);
    } else {
      chosen.pop_back();
    }
  }
  return out;
}

std::vector<Rational> minimal_determinants(const RationalMatrix& gram) {
  const std::size_t d = gram.rows();
  if (d > 3) throw std::invalid_argument("minimal_determinants: d <= 3 only");
  std::vector<Rational> dets(d + 1);
  dets[0] = 1;
  dets[d] = det(gram);
  if (d >= 2) dets[1] = successive_minima_sq(gram).front();
  if (d == 3) {
    // A minimal rank-2 saturated sublattice M has a Lagrange-reduced basis
    // u, v with |u|^2 |v|^2 <= 4/3 det M <= 4/3 B, so |v|^2 <= 4/3 B / lambda_1^2.
    Rational b = -1;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        const Rational m = gram(i, i) * gram(j, j) - gram(i, j) * gram(j, i);
        if (b < 0 || m < b) b = m;
      }
    const Rational radius = Rational(4, 3) * b / dets[1];
    const auto vecs = box_vectors(gram, radius);
    Rational best = b;
    for (std::size_t p = 0; p < vecs.size(); ++p) {
      for (std::size_t q = p + 1; q < vecs.size(); ++q) {
        const Vec& u = vecs[p];
        const Vec& v = vecs[q];
        long g = 0;
        for (std::size_t i = 0; i < 3; ++i)
          for (std::size_t j = i + 1; j < 3; ++j) g = std::gcd(g, u[i] * v[j] - u[j] * v[i]);
        if (g == 0) continue;
        Rational uv(0);
        for (std::size_t i = 0; i < 3; ++i)
          for (std::size_t j = 0; j < 3; ++j) uv += gram(i, j) * u[i] * v[j];
        const Rational sat = (norm(gram, u) * norm(gram, v) - uv * uv) / Rational(g * g);
        if (sat < best) best = sat;
      }
    }
    dets[2] = best;
  }
  return dets;
}

std::vector<SlopePiece> slopes_from_determinants(const std::vector<Rational>& dets) {
  const long d = static_cast<long>(dets.size()) - 1;
  std::vector<long> hull;
  for (long c = 0; c <= d; ++c) {
    while (hull.size() >= 2) {
      const long a = hull[hull.size() - 2];
      const long b = hull.back();
      const Rational left = power(dets[b] / dets[a], c - b);
      const Rational right = power(dets[c] / dets[b], b - a);
      if (left >= right) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(c);
  }
  std::vector<SlopePiece> out;
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    const long a = hull[s];
    const long b = hull[s + 1];
    for (long i = a; i < b; ++i) out.push_back({dets[b] / dets[a], b - a});
  }
  return out;
}

long riemann_roch_h0(const adelic::ffbundles::MatrixDivisor& md, long twist) {
  const Field& f = md.field;
  const std::size_t d = md.matrix.size();
  const Polynomial dm = poly_det(md.matrix, f);
  if (dm.is_zero()) throw std::invalid_argument("singular matrix");
  // adj(M)_{jl} = (-1)^{j+l} det(M without row l, column j)
  std::vector<std::vector<Polynomial>> adj(d, std::vector<Polynomial>(d));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t l = 0; l < d; ++l) {
      if (d == 1) {
        adj[j][l] = Polynomial::constant(1, f);
        continue;
      }
      std::vector<std::vector<Polynomial>> sub;
      for (std::size_t r = 0; r < d; ++r) {
        if (r == l) continue;
        std::vector<Polynomial> row;
        for (std::size_t c = 0; c < d; ++c)
          if (c != j) row.push_back(md.matrix[r][c]);
        sub.push_back(std::move(row));
      }
      const Polynomial m = poly_det(sub, f);
      adj[j][l] = ((j + l) % 2 == 0) ? m : Polynomial().sub(m, f);
    }
  }
  const Coeffs det_coeffs = dm.coeffs();
  const std::size_t rem_len = static_cast<std::size_t>(dm.degree());
  std::vector<Coeffs> conditions;
  long dim = 0;
  for (std::size_t j = 0; j < d; ++j) {
    const long top = twist + md.infinity_twist[j];
    for (long k = 0; k <= top; ++k) {
      ++dim;
      Coeffs row;
      for (std::size_t l = 0; l < d; ++l) {
        Coeffs prod(static_cast<std::size_t>(k), Rational(0));
        for (const auto& c : adj[j][l].coeffs()) prod.push_back(c);
        Coeffs rem = rem_len == 0 ? Coeffs{} : remainder(prod, det_coeffs, f);
        rem.resize(rem_len, Rational(0));
        row.insert(row.end(), rem.begin(), rem.end());
      }
      conditions.push_back(std::move(row));
    }
  }
  if (rem_len == 0 || conditions.empty()) return dim;
  return dim - static_cast<long>(field_rank(std::move(conditions), f));
}

MonteCarlo integrate_on_simplex(const adelic::okounkov::RoofFunction& g, std::size_t samples, std::uint64_t seed) {
  const std::size_t d = g.dim();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double vol = 1;
  for (std::size_t k = 2; k <= d; ++k) vol /= static_cast<double>(k);
  double sum = 0, sum_sq = 0;
  std::vector<double> e(d + 1), x(d);
  for (std::size_t s = 0; s < samples; ++s) {
    double total = 0;
    for (auto& v : e) {
      v = -std::log(1.0 - unif(rng));
      total += v;
    }
    for (std::size_t i = 0; i < d; ++i) x[i] = e[i + 1] / total;
    const double fx = g.evaluate_double(x);
    sum += fx;
    sum_sq += fx * fx;
  }
  const double n = static_cast<double>(samples);
  const double mean = sum / n;
  const double var = std::max(0.0, sum_sq / n - mean * mean);
  return {vol * mean, vol * std::sqrt(var / (n - 1))};
}

}  // namespace oracle
