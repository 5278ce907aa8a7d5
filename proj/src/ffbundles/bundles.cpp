#include "adelic/ffbundles/bundles.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "adelic/core/errors.hpp"

namespace adelic::ffbundles {

SplittingType::SplittingType(std::vector<long> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw ValidationError("splitting type must have positive rank");
  std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
}

long SplittingType::total_degree() const { return std::accumulate(degrees_.begin(), degrees_.end(), 0L); }

namespace {

constexpr long kZeroRow = std::numeric_limits<long>::min();

struct RowLead {
  long degree = kZeroRow;
  std::size_t pivot = 0;
};

// Shifted degree max_j(deg x_j - t_j); pivot is the rightmost column attaining it.
RowLead lead_of(const std::vector<Polynomial>& row, const std::vector<long>& twist) {
  RowLead lead;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j].is_zero()) continue;
    const long sd = row[j].degree() - twist[j];
    if (lead.degree == kZeroRow || sd >= lead.degree) {
      lead.degree = sd;
      lead.pivot = j;
    }
  }
  return lead;
}

void check_shape(const MatrixDivisor& m) {
  const std::size_t d = m.matrix.size();
  if (d == 0) throw ValidationError("matrix divisor must be non-empty");
  for (const auto& row : m.matrix)
    if (row.size() != d) throw ValidationError("matrix divisor must be square");
  if (m.infinity_twist.size() != d) throw ValidationError("infinity_twist length must equal matrix size");
}

void ensure_bounded(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) throw ResourceError(std::string(what) + " rank " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

}  // namespace

WeakPopovResult weak_popov(const MatrixDivisor& m) {
  check_shape(m);
  const std::size_t d = m.matrix.size();
  const Field& f = m.field;
  PolyMatrix rows = m.matrix;
  for (auto& row : rows)
    for (auto& p : row) p = p.normalized(f);
  for (;;) {
    std::vector<RowLead> leads(d);
    for (std::size_t i = 0; i < d; ++i) {
      leads[i] = lead_of(rows[i], m.infinity_twist);
      if (leads[i].degree == kZeroRow) throw DomainError("matrix divisor is singular");
    }
    bool changed = false;
    for (std::size_t i = 0; i < d && !changed; ++i) {
      for (std::size_t k = 0; k < d && !changed; ++k) {
        if (i == k || leads[i].pivot != leads[k].pivot) continue;
        if (leads[i].degree < leads[k].degree) continue;
        // Cancel row i's leading term against row k's.
        const std::size_t j = leads[i].pivot;
        const Polynomial& pi = rows[i][j];
        const Polynomial& pk = rows[k][j];
        const Rational c = f.normalize(pi.leading() * f.inverse(pk.leading()));
        const auto shift = static_cast<std::size_t>(pi.degree() - pk.degree());
        for (std::size_t col = 0; col < d; ++col)
          rows[i][col] = rows[i][col].sub_scaled_shift(rows[k][col], c, shift, f);
        changed = true;
      }
    }
    if (!changed) {
      WeakPopovResult res;
      res.reduced = std::move(rows);
      for (const auto& l : leads) {
        res.row_degrees.push_back(l.degree);
        res.pivots.push_back(l.pivot);
      }
      return res;
    }
  }
}

SplittingType reduce_to_splitting(const MatrixDivisor& m) {
  const WeakPopovResult wp = weak_popov(m);
  std::vector<long> a;
  for (const long deg : wp.row_degrees) a.push_back(-deg);
  return SplittingType(std::move(a));
}

std::vector<long> slopes_ff(const SplittingType& s) { return s.degrees(); }

std::vector<long> minima_ff(const SplittingType& s) {
  std::vector<long> z;
  for (const long a : s.degrees()) z.push_back(-a);
  return z;
}

SplittingType sym_ff(const SplittingType& s, unsigned n, std::size_t cap) {
  if (n == 0) throw DomainError("symmetric power exponent must be positive");
  const std::size_t d = s.rank();
  const Integer count = binomial(static_cast<unsigned>(n + d - 1), static_cast<unsigned>(d - 1));
  if (count > Integer(static_cast<unsigned long>(cap))) {
    throw ResourceError("symmetric power rank " + count.get_str() + " exceeds cap " + std::to_string(cap));
  }
  std::vector<long> out;
  std::function<void(std::size_t, unsigned, long)> rec = [&](std::size_t start, unsigned left, long acc) {
    if (left == 0) {
      out.push_back(acc);
      return;
    }
    for (std::size_t i = start; i < d; ++i) rec(i, left - 1, acc + s.degrees()[i]);
  };
  rec(0, n, 0);
  return SplittingType(std::move(out));
}

SplittingType wedge_ff(const SplittingType& s, std::size_t r, std::size_t cap) {
  const std::size_t d = s.rank();
  if (r == 0 || r > d) throw DomainError("wedge power rank must lie in 1..d");
  ensure_bounded(binomial(static_cast<unsigned>(d), static_cast<unsigned>(r)).get_ui(), cap, "wedge power");
  std::vector<long> out;
  std::function<void(std::size_t, std::size_t, long)> rec = [&](std::size_t start, std::size_t left, long acc) {
    if (left == 0) {
      out.push_back(acc);
      return;
    }
    for (std::size_t i = start; i + left <= d; ++i) rec(i + 1, left - 1, acc + s.degrees()[i]);
  };
  rec(0, r, 0);
  return SplittingType(std::move(out));
}

SplittingType dual_ff(const SplittingType& s) { return SplittingType(minima_ff(s)); }

SplittingType tensor_ff(const SplittingType& a, const SplittingType& b, std::size_t cap) {
  ensure_bounded(a.rank() * b.rank(), cap, "tensor");
  std::vector<long> out;
  for (const long x : a.degrees())
    for (const long y : b.degrees()) out.push_back(x + y);
  return SplittingType(std::move(out));
}

}  // namespace adelic::ffbundles
