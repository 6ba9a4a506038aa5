#pragma once

#include <map>
#include <vector>

#include "jetcalc/expr.hpp"
#include "jetcalc/forms.hpp"
#include "jetcalc/problem.hpp"

namespace jetcalc {

/// Field index -> psi, the component of X against d/dphi^K.
using VerticalField = std::map<int, Expr>;

/// psi d/dphi + sum over 1 <= |mu| <= order of D_mu(psi) d/dphi_mu.
VectorField prolong_vertical_field(const Symbols& s, const VerticalField& X, int order);

/// Evaluates an expression on the jet of a section phi^K = u_K(x): every
/// jet atom phi^K_mu becomes d_mu u_K.
Expr evaluate_on_jet(const Expr& e, const std::map<int, Expr>& section);

/// Homogeneous polynomial of degree d in `vars` variables with coefficients
/// that may carry parameters.
struct HomogeneousPoly {
  std::size_t vars = 0;
  int degree = 0;
  std::map<MultiIndex, Expr> coeffs;

  /// Reads an expression over base coordinates x1..x_vars; other atoms go into coefficients.
  static HomogeneousPoly from_expr(const Expr& e, std::size_t vars);
  Expr to_expr() const;

  friend bool operator==(const HomogeneousPoly&, const HomogeneousPoly&) = default;
};

/// (1/d) dQ/dx_i for each variable i.
std::vector<HomogeneousPoly> polarize(const HomogeneousPoly& Q);

/// sum_i x_i P_i; inverse of polarize on its image.
HomogeneousPoly resymmetrize(const std::vector<HomogeneousPoly>& P, int degree);

/// Gram matrix of a quadratic form: B_ij = coefficient of x_j in the i-th polarization.
std::vector<std::vector<Expr>> gram_matrix(const HomogeneousPoly& Q);

}  // namespace jetcalc
