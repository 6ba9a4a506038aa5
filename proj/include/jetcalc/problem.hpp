#pragma once

#include <map>
#include <string>
#include <vector>

#include "jetcalc/expr.hpp"

namespace jetcalc {

/// Names attached to atom indices: base coordinates, fields, parameters and
/// opaque functions with their arities.
struct Symbols {
  std::size_t n = 1;
  std::vector<std::string> base_names;
  std::vector<std::string> fields;
  std::vector<std::string> params;
  std::map<std::string, int> opaque;

  /// Symbols with default base names x1..xn.
  static Symbols standard(std::size_t n, std::vector<std::string> fields);

  int field_index(const std::string& name) const;
  int base_index(const std::string& name) const;
  bool has_param(const std::string& name) const;

  Expr x(int dir) const { return Expr(Atom::base(dir)); }
  Expr jet(int field, const MultiIndex& mu) const { return Expr(Atom::jet(field, mu)); }
  Expr jet(int field, std::initializer_list<int> mu) const { return jet(field, MultiIndex(mu)); }
  Expr param(const std::string& name) const { return Expr(Atom::parameter(name)); }
  MultiIndex zero() const { return MultiIndex(n); }
  MultiIndex unit(int dir) const { return MultiIndex::unit(n, static_cast<std::size_t>(dir)); }
};

/// A Lagrangian density of order k on the jets of the declared fields, with
/// optional first-order constraints.
struct LagrangianProblem : Symbols {
  int k = 1;
  Expr lagrangian;
  std::vector<Expr> constraints;

  /// Checks n >= 1, k >= 1, jet orders <= k and absence of momentum/multiplier atoms.
  void validate() const;
};

}  // namespace jetcalc
