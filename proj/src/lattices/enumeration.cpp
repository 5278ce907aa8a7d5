#include "adelic/lattices/enumeration.hpp"

#include <string>

#include "adelic/core/errors.hpp"
#include "adelic/lattices/lll.hpp"

namespace adelic::lattices {

namespace {

// q(x) = sum_i b_i (x_i + sum_{j>i} mu(j,i) x_j)^2, explored from the last
// coordinate down. Partial sums are exact rationals.
class FinckePohst {
 public:
  FinckePohst(const RationalMatrix& gram, const Rational& bound, std::uint64_t budget)
      : gs_(gram_schmidt(gram)), bound_(bound), budget_(budget), n_(gram.rows()), x_(n_, 0) {}

  std::vector<ShortVector> run() {
    if (n_ > 0) visit(n_ - 1, Rational(0), true);
    return std::move(out_);
  }

 private:
  void visit(std::size_t level, const Rational& used, bool all_higher_zero) {
    Rational center(0);
    for (std::size_t j = level + 1; j < n_; ++j) {
      if (x_[j] != 0) center -= gs_.mu(j, level) * x_[j];
    }
    const Rational remaining = bound_ - used;
    const Integer start = round_of(center);
    // Walk upward from the rounded center, then downward from one below it.
    for (int dir = 0; dir < 2; ++dir) {
      Integer v = dir == 0 ? start : Integer(start - 1);
      for (;;) {
        if (all_higher_zero && v < 0) break;
        const Rational off = Rational(v) - center;
        const Rational contrib = gs_.b[level] * off * off;
        if (contrib > remaining) break;
        tick();
        x_[level] = v;
        const Rational total = used + contrib;
        if (level == 0) {
          if (!(all_higher_zero && v == 0)) out_.push_back({x_, total});
        } else {
          visit(level - 1, total, all_higher_zero && v == 0);
        }
        if (dir == 0) {
          ++v;
        } else {
          --v;
        }
      }
    }
    x_[level] = 0;
  }

  void tick() {
    if (++nodes_ > budget_) {
      throw ResourceError("enumeration node budget of " + std::to_string(budget_) + " exceeded",
                          "radius^2 <= " + to_string(bound_));
    }
  }

  GramSchmidt gs_;
  Rational bound_;
  std::uint64_t budget_;
  std::size_t n_;
  IntVector x_;
  std::uint64_t nodes_ = 0;
  std::vector<ShortVector> out_;
};

}  // namespace

std::vector<ShortVector> enumerate_short_vectors(const RationalMatrix& gram, const Rational& bound,
                                                 std::uint64_t node_budget) {
  if (bound < 0) return {};
  return FinckePohst(gram, bound, node_budget).run();
}

IntVector sign_normalized(IntVector v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0) {
      for (auto& y : v) y = -y;
    }
    break;
  }
  return v;
}

std::vector<ShortVector> short_vectors(const RationalMatrix& gram, const Rational& bound,
                                       std::uint64_t node_budget) {
  const LllResult red = lll_reduce(gram);
  std::vector<ShortVector> raw = enumerate_short_vectors(red.gram, bound, node_budget);
  const std::size_t n = gram.rows();
  for (auto& sv : raw) {
    IntVector y(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (sv.coords[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) y[j] += sv.coords[i] * red.transform(i, j);
    }
    sv.coords = sign_normalized(std::move(y));
  }
  return raw;
}

}  // namespace adelic::lattices
