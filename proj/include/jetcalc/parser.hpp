#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jetcalc/expr.hpp"
#include "jetcalc/problem.hpp"

namespace jetcalc {

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses one DSL expression. Jets above `max_jet_order` are rejected when it
/// is non-negative.
Expr parse_expr(std::string_view text, const Symbols& s, int max_jet_order = -1);
Expr parse_expr(std::string_view text, const LagrangianProblem& p);

/// Parses a single atom such as `u[1]` or `p_u[0;1]`.
Atom parse_atom(std::string_view text, const Symbols& s);

/// Contents of a problem file.
struct ProblemFile {
  LagrangianProblem problem;
  bool has_lagrangian = false;
  /// Fibre coordinate -> expression in the base coordinates.
  std::map<Atom, Expr> section;
  /// F^lambda of a divergence block, one entry per base direction.
  std::vector<Expr> divergence;
  /// Field index -> vertical component psi.
  std::map<int, Expr> vertical;
  std::optional<Expr> polynomial;
};

ProblemFile parse_problem(std::string_view text);
ProblemFile load_problem(const std::filesystem::path& path);

}  // namespace jetcalc
