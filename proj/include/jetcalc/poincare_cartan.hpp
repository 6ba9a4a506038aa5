#pragma once

#include <string>
#include <vector>

#include "jetcalc/forms.hpp"
#include "jetcalc/problem.hpp"
#include "jetcalc/variational.hpp"

namespace jetcalc {

/// Multisymplectic (n+1)-form and its primitive.
struct PCForm {
  /// sum dp^{mu lambda} ^ block(lambda, dphi_mu) - dH ^ d^n x.
  ExteriorForm omega;
  /// sum p^{mu lambda} block(lambda, dphi_mu) - H d^n x, with d(theta) = omega.
  ExteriorForm theta;
  /// The Hamiltonian in slot momenta.
  Expr H;
};

PCForm pc_form(const LagrangianProblem& p);

/// Same assembly for a given Hamiltonian in slot momenta.
PCForm pc_form_from_hamiltonian(const LagrangianProblem& p, const Expr& H_slots);

/// Vertical coordinate fields of the phase bundle: jets |mu| <= k-1 and all slots.
std::vector<Atom> phase_fibre_coordinates(const LagrangianProblem& p);

/// For each vertical basis field X, the d^n x coefficient of sigma^*(X _| omega).
EquationSet multisymplectic_residuals(const LagrangianProblem& p, const SectionData& sigma);
EquationSet multisymplectic_residuals(const LagrangianProblem& p, const PCForm& form, const SectionData& sigma);

struct FormResidual {
  std::string label;
  ExteriorForm value;
};

struct GalileiReport {
  std::vector<FormResidual> residuals;
  bool ok() const;
};

/// Mechanics L = m/2 q[1]^2 - U(t, q) under the boost Q = q - V t, P = p - m V.
GalileiReport galilei_transform_check();

/// Symbols of the Galilei example: base t, field q, params m, V (and V1, V2), opaque U(2).
LagrangianProblem galilei_problem();

}  // namespace jetcalc
