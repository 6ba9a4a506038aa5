#pragma once

#include <map>
#include <vector>

#include "jetcalc/expr.hpp"

namespace jetcalc {

/// Ordered product of coordinate differentials, strictly increasing.
using Factors = std::vector<Atom>;

/// Degree-homogeneous differential form sum c * dxi_1 ^ ... ^ dxi_p. The basis
/// one-forms are differentials of Base, Jet or (underived) Momentum atoms.
class ExteriorForm {
 public:
  explicit ExteriorForm(int degree = 0) : degree_(degree) {}

  static ExteriorForm scalar(const Expr& f);
  /// d(coordinate).
  static ExteriorForm differential(const Atom& c);
  /// c * dxi_1 ^ ... ^ dxi_p with arbitrary factor order (sign applied).
  static ExteriorForm term(const Expr& c, const std::vector<Atom>& factors);
  /// dx^1 ^ ... ^ dx^n.
  static ExteriorForm volume(std::size_t n);

  int degree() const { return degree_; }
  const std::map<Factors, Expr>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Expr coefficient(const Factors& f) const;

  ExteriorForm& operator+=(const ExteriorForm& other);
  ExteriorForm& operator-=(const ExteriorForm& other);
  friend ExteriorForm operator+(ExteriorForm a, const ExteriorForm& b) { return a += b; }
  friend ExteriorForm operator-(ExteriorForm a, const ExteriorForm& b) { return a -= b; }
  ExteriorForm operator-() const;
  friend ExteriorForm operator*(const Expr& c, const ExteriorForm& a);

  friend bool operator==(const ExteriorForm&, const ExteriorForm&) = default;

 private:
  void add_term(Factors f, Expr c);

  int degree_;
  std::map<Factors, Expr> terms_;
};

/// Components against the coordinate vector fields d/dxi.
using VectorField = std::map<Atom, Expr>;

/// Fibre coordinate -> expression in base coordinates.
using SectionData = std::map<Atom, Expr>;

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);

/// d of each coefficient expanded over the base, jet and momentum atoms it
/// contains (through function arguments as well).
ExteriorForm exterior_derivative(const ExteriorForm& a);

/// Contraction in the first slot.
ExteriorForm interior_product(const VectorField& X, const ExteriorForm& a);

/// Pullback along x -> sigma(x); the result only involves dx^mu.
ExteriorForm pullback_section(const ExteriorForm& a, const SectionData& sigma);

/// Differential of a scalar function.
ExteriorForm differential(const Expr& f);

/// dx^1 ^ ... ^ (alpha in the lambda-th place) ^ ... ^ dx^n for a one-form alpha.
ExteriorForm volume_block(std::size_t n, int lambda, const ExteriorForm& alpha);

}  // namespace jetcalc
