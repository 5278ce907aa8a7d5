#pragma once

#include <vector>

#include "adelic/core/rational.hpp"
#include "adelic/exactlog/log_value.hpp"

namespace adelic::okounkov {

using exactlog::Quantity;

/// maximize c.x subject to A x = b, x >= 0. The constraint matrix and costs
/// are rational; right-hand sides may carry logarithmic parts.
struct LpProblem {
  RationalMatrix a;
  std::vector<Quantity> b;
  RationalVector c;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Quantity> x;
  Quantity value;
  /// Dual multipliers y with A^T y >= c and b.y = value at optimality.
  RationalVector dual;
  std::vector<std::size_t> basis;
};

/// Two-phase primal simplex with Bland's rule; exact throughout.
LpSolution solve_lp(const LpProblem& p);

/// Primal feasibility, dual feasibility and equal objective values, all
/// checked exactly.
bool verify_optimality(const LpProblem& p, const LpSolution& s);

}  // namespace adelic::okounkov
