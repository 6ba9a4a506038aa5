#pragma once

#include <map>
#include <vector>

#include "jetcalc/expr.hpp"
#include "jetcalc/problem.hpp"
#include "jetcalc/variational.hpp"

namespace jetcalc {

/// Result of exchanging variables x_a for conjugates y_a = df/dx_a.
struct Exchange {
  /// sum_a y_a x_a - f with x eliminated.
  Expr transform;
  /// x_a -> expression in the y's and the remaining variables.
  std::map<Atom, Expr> inversion;
};

/// Legendre transform of f with respect to `xs`, conjugates named by `ys`.
/// f must be quadratic in `xs` with an invertible Hessian whose determinant
/// is a monomial (so that it can be divided by exactly).
Exchange legendre_exchange(const Expr& f, const std::vector<Atom>& xs, const std::vector<Atom>& ys);

/// Determinant of a square matrix of expressions (Laplace expansion).
Expr determinant(const std::vector<std::vector<Expr>>& a);

struct LegendreData {
  /// Transform with respect to the top jets, in top momenta p_K[nu] (|nu| = k).
  Expr h;
  /// Sum over 1 <= |nu| <= k-1 of p_K[nu] * phi_nu, plus h.
  Expr H;
  /// H written with slot momenta: sum p_K[mu;lambda] phi_{mu+lambda} - L after inversion.
  Expr H_slots;
  /// Top jet atom -> expression in the top momenta.
  std::map<Atom, Expr> inversion;
};

LegendreData legendre_top(const LagrangianProblem& p);

/// phi_nu = dh/dp^(nu) (|nu| = k); p^(nu) = -dh/dphi_nu - D_lambda p^{nu lambda};
/// 0 = -dh/dphi - D_lambda p^lambda.
EquationSet hamilton_equations(const LagrangianProblem& p);

struct FieldHamiltonian {
  /// H(phi, p^mu) in the slot momenta p_K[0;mu].
  Expr H;
  /// phi_mu = dH/dp^mu and D_mu p^mu = -dH/dphi.
  EquationSet equations;
};

FieldHamiltonian field_hamiltonian_first_order(const LagrangianProblem& p);

/// p^t phi_t - L with only the time derivative exchanged (k = 1).
Expr energy_legendre(const LagrangianProblem& p, int time_direction);

}  // namespace jetcalc
