#pragma once

#include <vector>

#include "jetcalc/expr.hpp"
#include "jetcalc/problem.hpp"
#include "jetcalc/variational.hpp"

namespace jetcalc {

/// L0 = D_lambda F^lambda for a single-field or multi-field F.
struct DivergenceData {
  std::vector<Expr> F;
  Expr L0;
  /// 1 + highest jet order in F (at least 1).
  int l = 1;
};

DivergenceData divergence_lagrangian(const Symbols& s, const std::vector<Expr>& F);

/// p^{mu lambda} = dF^lambda/dphi_mu on the order-l grid (not symmetrized).
MomentumAssignment trivial_momenta(const Symbols& s, const std::vector<Expr>& F);

struct DivergenceCheck {
  DivergenceData data;
  /// dL0/dphi_mu - D_lambda p^{mu lambda} against the symmetrized trivial momenta, 0 <= |mu| <= l.
  EquationSet residual_table;
  /// Eliminated Euler-Lagrange expression of L0, per field (expected 0).
  std::vector<Expr> euler_lagrange;
  bool ok() const;
};

DivergenceCheck verify_divergence_trivial(const Symbols& s, const std::vector<Expr>& F);

enum class ShiftDirection { Forward, Inverse };

/// p^{mu lambda} +- dF^lambda/dphi_mu; the grid is raised to the order of F when needed.
MomentumAssignment momentum_shift(const MomentumAssignment& m, const std::vector<Expr>& F, ShiftDirection direction);

/// Evaluates the cascade of L + D_lambda F^lambda on the shifted canonical momenta of L.
/// Every row except the last per field must vanish identically; the last row must
/// equal the unshifted Euler-Lagrange residual of L.
EquationSet verify_momentum_shift(const LagrangianProblem& p, const std::vector<Expr>& F);

/// Cascade rows with the momenta of m substituted (lhs: symmetrized momenta).
EquationSet evaluate_cascade(const LagrangianProblem& p, const MomentumAssignment& m);

}  // namespace jetcalc
