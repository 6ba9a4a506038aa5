#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jetcalc/expr.hpp"
#include "jetcalc/forms.hpp"
#include "jetcalc/problem.hpp"

namespace jetcalc {

/// Momentum slot p_K^{mu lambda}: field K, multi-index mu (|mu| <= k-1) and
/// free last index lambda.
struct SlotKey {
  int field = 0;
  MultiIndex mu;
  int last = 0;
  friend auto operator<=>(const SlotKey&, const SlotKey&) = default;
};

/// Values of all momentum slots of an (n, k) grid. The top momenta
/// p^{(nu)}, |nu| = k, are the symmetrizations of the |mu| = k-1 slots and
/// are therefore derived rather than stored.
class MomentumAssignment {
 public:
  MomentumAssignment() = default;
  MomentumAssignment(std::size_t n, std::size_t fields, int k);

  std::size_t n() const { return n_; }
  std::size_t fields() const { return fields_; }
  int k() const { return k_; }

  const Expr& at(int field, const MultiIndex& mu, int last) const;
  const Expr& at(const SlotKey& key) const;
  void set(int field, const MultiIndex& mu, int last, Expr value);
  void set(const SlotKey& key, Expr value);
  void add(const SlotKey& key, const Expr& value);

  /// Total symmetrization S^nu = sum over lambda with nu_lambda > 0 of p^{(nu - lambda) lambda}, 1 <= |nu| <= k.
  Expr symmetrized(int field, const MultiIndex& nu) const;
  /// Top momentum p^{(nu)}, |nu| = k.
  Expr top(int field, const MultiIndex& nu) const;

  const std::map<SlotKey, Expr>& slots() const { return slots_; }
  /// Same values on a grid of order new_k >= k (new slots zero).
  MomentumAssignment extended(int new_k) const;
  bool is_zero() const;

  friend bool operator==(const MomentumAssignment&, const MomentumAssignment&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t fields_ = 0;
  int k_ = 0;
  std::map<SlotKey, Expr> slots_;
};

/// Symmetric representative of a symmetrized value S^{mu+lambda} in slot (mu, lambda).
Rational symmetric_slot_weight(const MultiIndex& mu, int last);

/// (field, mu) -> value, 0 <= |mu| <= k.
using CurrentTable = std::map<std::pair<int, MultiIndex>, Expr>;

struct Equation {
  std::string label;
  Expr lhs;
  Expr rhs;
  Expr residual() const { return lhs - rhs; }
};
using EquationSet = std::vector<Equation>;

bool all_residuals_zero(const EquationSet& eqs);

/// Replaces slot atoms p_K[mu;lambda|d] by D_d of their value and symmetric
/// atoms p_K[nu|d] by D_d of the symmetrization.
Expr substitute_momenta(const Expr& e, const MomentumAssignment& m);

/// dL/dphi^K_mu as a multi-index partial.
Expr lagrangian_gradient(const LagrangianProblem& p, int field, const MultiIndex& mu);

MomentumAssignment canonical_momenta(const LagrangianProblem& p);
CurrentTable currents(const LagrangianProblem& p, const MomentumAssignment& m);

/// Rows p^{(nu)} = dL/dphi_nu - D_lambda p^{nu lambda} (top rows without the
/// divergence) and 0 = dL/dphi - D_lambda p^lambda, momenta left symbolic.
EquationSet cascade_equations(const LagrangianProblem& p);

/// sum_mu (-1)^|mu| D_mu dL/dphi_mu, one entry per field.
std::vector<Expr> euler_lagrange(const LagrangianProblem& p);

/// dL/dphi - D_lambda p^lambda evaluated on m, one entry per field.
std::vector<Expr> cascade_residual(const LagrangianProblem& p, const MomentumAssignment& m);

/// d_lambda sigma(phi_mu) - sigma(phi_{mu+lambda}) for |mu| <= k-2, plus the
/// |mu| = k-1 rows whose target slot sigma assigns.
EquationSet holonomy_residual(const LagrangianProblem& p, const SectionData& sigma);

/// Adds an admissible gauge table chi (every symmetrization zero) and
/// propagates the compensating divergences to all lower levels.
MomentumAssignment apply_momentum_gauge(const MomentumAssignment& m, const MomentumAssignment& chi);

/// Gauge-fixes m to the symmetric representative of its class, top level first,
/// keeping the currents unchanged.
MomentumAssignment symmetrize_momenta(const MomentumAssignment& m);

/// Plain projection of every slot onto its symmetric representative.
MomentumAssignment symmetric_part(const MomentumAssignment& m);

/// Constrained first-order family with free multipliers lambda[a].
EquationSet constrained_generating_family(const LagrangianProblem& p);

struct PsiReduction {
  Expr trace;
  std::vector<Expr> momenta;
};

/// (sum_mu d_mu p^mu, p^mu) from the momenta p^mu and their derivatives dp[mu][nu] = d_nu p^mu.
PsiReduction psi_reduction(const std::vector<Expr>& p, const std::vector<std::vector<Expr>>& dp);

}  // namespace jetcalc
