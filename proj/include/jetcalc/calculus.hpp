#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>

#include "jetcalc/expr.hpp"

namespace jetcalc {

/// Formal partial derivative: every atom other than `c` is independent, and
/// opaque functions differentiate by the chain rule into positional markers.
Expr partial_derivative(const Expr& e, const Atom& c);

/// Truncated total derivative D_dir (0-based direction). Jets and momentum
/// atoms are raised by one along `dir`; multipliers and parameters are constants.
Expr total_derivative(const Expr& e, int dir);

/// D_mu as a composition of single total derivatives.
Expr total_derivative(const Expr& e, const MultiIndex& mu);

/// Applies a derivation given by its values on atoms, extended by the
/// Leibniz rule. `on_atom` is consulted once per distinct atom.
Expr derive(const Expr& e, const std::function<Expr(const Atom&)>& on_atom);

/// Replaces atoms (including those inside function arguments).
Expr substitute(const Expr& e, const std::function<std::optional<Expr>(const Atom&)>& replace);
Expr substitute(const Expr& e, const std::map<Atom, Expr>& values);

/// Atoms occurring at top level (function arguments are not entered).
std::set<Atom> atoms_of(const Expr& e);
/// Atoms occurring anywhere, including inside function arguments.
std::set<Atom> all_atoms_of(const Expr& e);

bool depends_on(const Expr& e, const std::function<bool(const Atom&)>& pred);

/// Highest |mu| among jet atoms of `field` (any field when negative); -1 if none.
int max_jet_order(const Expr& e, int field = -1);

/// Global safety cap on jet/momentum derivative order produced by total derivatives.
void set_order_cap(int cap);
int order_cap();

}  // namespace jetcalc
