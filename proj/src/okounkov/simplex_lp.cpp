#include "adelic/okounkov/simplex_lp.hpp"

#include <optional>

#include "adelic/core/errors.hpp"
#include "adelic/exactlog/compare.hpp"

namespace adelic::okounkov {

namespace {

// Dense tableau over the original columns followed by one artificial column
// per row. The artificial block always holds B^{-1} of the sign-adjusted rows.
class Tableau {
 public:
  explicit Tableau(const LpProblem& p) : m_(p.a.rows()), n_(p.a.cols()), t_(m_, n_ + m_), rhs_(p.b), sign_(m_, 1) {
    for (std::size_t i = 0; i < m_; ++i) {
      if (exactlog::sign(rhs_[i]) < 0) {
        sign_[i] = -1;
        rhs_[i] = -rhs_[i];
      }
      for (std::size_t j = 0; j < n_; ++j) t_(i, j) = sign_[i] < 0 ? Rational(-p.a(i, j)) : p.a(i, j);
      t_(i, n_ + i) = 1;
      basis_.push_back(n_ + i);
    }
  }

  // Maximizes cost over columns < limit; returns false when unbounded.
  bool optimize(const RationalVector& cost, std::size_t limit) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < limit; ++j) {
        if (is_basic(j)) continue;
        if (reduced_cost(cost, j) > 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      const std::size_t e = *entering;
      std::optional<std::size_t> leave;
      Quantity best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_(i, e) <= 0) continue;
        const Quantity ratio = rhs_[i] * (Rational(1) / t_(i, e));
        if (!leave) {
          leave = i;
          best = ratio;
          continue;
        }
        const auto ord = exactlog::compare(ratio, best);
        if (ord == exactlog::Ordering::Less || (ord == exactlog::Ordering::Equal && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, e);
    }
  }

  // After phase one: pivot zero-level artificials out where possible.
  void expel_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (t_(i, j) != 0 && !is_basic(j)) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  Quantity objective(const RationalVector& cost) const {
    Quantity v;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < cost.size()) v += rhs_[i] * cost[basis_[i]];
    }
    return v;
  }

  std::vector<Quantity> solution() const {
    std::vector<Quantity> x(n_);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = rhs_[i];
    return x;
  }

  // y_i = sign_i * (c_B^T B^{-1})_i for the original rows.
  RationalVector duals(const RationalVector& cost) const {
    RationalVector y(m_, Rational(0));
    for (std::size_t k = 0; k < m_; ++k) {
      Rational s(0);
      for (std::size_t i = 0; i < m_; ++i) {
        if (basis_[i] < cost.size()) s += cost[basis_[i]] * t_(i, n_ + k);
      }
      y[k] = sign_[k] < 0 ? Rational(-s) : s;
    }
    return y;
  }

  const std::vector<std::size_t>& basis() const { return basis_; }
  std::size_t cols() const { return n_; }

 private:
  bool is_basic(std::size_t j) const {
    for (const auto b : basis_)
      if (b == j) return true;
    return false;
  }

  Rational reduced_cost(const RationalVector& cost, std::size_t j) const {
    Rational rc = j < cost.size() ? cost[j] : Rational(0);
    for (std::size_t i = 0; i < m_; ++i) {
      const std::size_t b = basis_[i];
      if (b < cost.size() && t_(i, j) != 0) rc -= cost[b] * t_(i, j);
    }
    return rc;
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational piv = t_(r, c);
    const Rational inv = Rational(1) / piv;
    for (std::size_t j = 0; j < t_.cols(); ++j) t_(r, j) *= inv;
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || t_(i, c) == 0) continue;
      const Rational f = t_(i, c);
      for (std::size_t j = 0; j < t_.cols(); ++j) t_(i, j) -= f * t_(r, j);
      rhs_[i] -= rhs_[r] * f;
    }
    basis_[r] = c;
  }

  std::size_t m_, n_;
  RationalMatrix t_;
  std::vector<Quantity> rhs_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution solve_lp(const LpProblem& p) {
  if (p.b.size() != p.a.rows() || p.c.size() != p.a.cols()) throw ValidationError("LP dimensions are inconsistent");
  const std::size_t m = p.a.rows();
  const std::size_t n = p.a.cols();
  Tableau tab(p);

  RationalVector phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  tab.optimize(phase1, n + m);
  LpSolution sol;
  if (exactlog::sign(tab.objective(phase1)) < 0) {
    sol.status = LpStatus::Infeasible;
    return sol;
  }
  tab.expel_artificials();
  if (!tab.optimize(p.c, n)) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }
  sol.status = LpStatus::Optimal;
  sol.x = tab.solution();
  sol.value = tab.objective(p.c);
  sol.dual = tab.duals(p.c);
  sol.basis = tab.basis();
  return sol;
}

bool verify_optimality(const LpProblem& p, const LpSolution& s) {
  if (s.status != LpStatus::Optimal) return false;
  const std::size_t m = p.a.rows();
  const std::size_t n = p.a.cols();
  for (std::size_t j = 0; j < n; ++j)
    if (exactlog::sign(s.x[j]) < 0) return false;
  for (std::size_t i = 0; i < m; ++i) {
    Quantity lhs;
    for (std::size_t j = 0; j < n; ++j)
      if (p.a(i, j) != 0) lhs += s.x[j] * p.a(i, j);
    if (lhs != p.b[i]) return false;
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rational aty(0);
    for (std::size_t i = 0; i < m; ++i) aty += p.a(i, j) * s.dual[i];
    if (aty < p.c[j]) return false;
  }
  Quantity primal, dual;
  for (std::size_t j = 0; j < n; ++j) primal += s.x[j] * p.c[j];
  for (std::size_t i = 0; i < m; ++i) dual += p.b[i] * s.dual[i];
  return primal == dual && primal == s.value;
}

}  // namespace adelic::okounkov
