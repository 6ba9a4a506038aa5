#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jetcalc/multi_index.hpp"
#include "jetcalc/rational.hpp"

namespace jetcalc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Atom categories, listed in canonical order.
enum class AtomKind : std::uint8_t { Base, Jet, Momentum, Multiplier, Parameter, Function };

class Expr;
struct FunctionCall;

/// A coordinate or symbol an expression is built from:
///   Base(mu)                     x^mu
///   Jet(K, mu)                   phi^K_mu
///   Momentum(K, mu, lambda, d)   p_K^{mu lambda}, differentiated d times along the base
///                                (lambda < 0 marks the symmetrized slot p_K^{(mu)})
///   Multiplier(a)                Lagrange multiplier lambda^a
///   Parameter(name)              a constant symbol
///   Function(name, derivs, args) an opaque function applied to expressions, with a
///                                sorted list of positional derivative markers
class Atom {
 public:
  static Atom base(int dir);
  static Atom jet(int field, const MultiIndex& mu);
  static Atom momentum(int field, const MultiIndex& mu, int last, const MultiIndex& deriv);
  static Atom momentum(int field, const MultiIndex& mu, int last);
  static Atom symmetric_momentum(int field, const MultiIndex& mu);
  static Atom multiplier(int index);
  static Atom parameter(std::string name);
  static Atom function(std::string name, std::vector<int> derivs, std::vector<Expr> args);

  AtomKind kind() const { return kind_; }
  int field() const { return field_; }
  /// Base direction (Base), last momentum index (Momentum, -1 if symmetrized) or
  /// multiplier number (Multiplier).
  int index() const { return index_; }
  int direction() const { return index_; }
  int last_index() const { return index_; }
  const MultiIndex& multi_index() const { return mi_; }
  const MultiIndex& derivative() const { return deriv_; }
  const std::string& name() const;
  const FunctionCall& call() const;

  bool is_coordinate() const {
    return kind_ == AtomKind::Base || kind_ == AtomKind::Jet || kind_ == AtomKind::Momentum;
  }
  bool is_fibre() const { return kind_ == AtomKind::Jet || kind_ == AtomKind::Momentum; }
  bool is_symmetric_momentum() const { return kind_ == AtomKind::Momentum && index_ < 0; }

  /// Same momentum slot with the base-derivative counter replaced.
  Atom with_derivative(const MultiIndex& deriv) const;

  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);
  friend bool operator==(const Atom& a, const Atom& b) { return (a <=> b) == 0; }

 private:
  AtomKind kind_ = AtomKind::Base;
  std::int16_t field_ = -1;
  std::int16_t index_ = -1;
  MultiIndex mi_;
  MultiIndex deriv_;
  std::shared_ptr<const FunctionCall> payload_;
};

/// Product of atom powers, sorted by atom order, exponents nonzero (negative
/// exponents only arise from division by monomials).
using Monomial = std::vector<std::pair<Atom, int>>;

std::strong_ordering compare(const Monomial& a, const Monomial& b);
Monomial multiply(const Monomial& a, const Monomial& b);

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Exact symbolic expression in canonical form: an expanded Laurent polynomial
/// over atoms with rational coefficients, like terms merged, terms sorted.
/// Every operation returns a canonical value, so structural equality is
/// mathematical equality in the polynomial-over-opaque-symbols algebra.
class Expr {
 public:
  Expr() = default;
  Expr(int value);  // NOLINT(google-explicit-constructor)
  Expr(const Rational& value);  // NOLINT(google-explicit-constructor)
  explicit Expr(const Atom& atom);

  static Expr from_terms(std::vector<Term> terms);
  static Expr monomial(Monomial m, const Rational& coeff);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<Rational> constant_value() const;
  bool is_constant() const { return constant_value().has_value(); }
  /// A single term (nonzero coefficient times a power product).
  bool is_monomial() const { return terms_.size() == 1; }

  Expr operator-() const;
  Expr& operator+=(const Expr& other);
  Expr& operator-=(const Expr& other);
  Expr& operator*=(const Expr& other);

  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
  friend Expr operator*(const Expr& a, const Expr& b);
  /// Division is only defined by a nonzero monomial.
  friend Expr operator/(const Expr& a, const Expr& b);

  Expr pow(int exponent) const;
  /// Inverse of a monomial; throws for sums.
  Expr inverse() const;

  friend bool operator==(const Expr& a, const Expr& b);
  friend std::strong_ordering operator<=>(const Expr& a, const Expr& b);

 private:
  std::vector<Term> terms_;
};

/// Canonical-form projection. Values are kept canonical at all times, so this
/// is the identity; it exists for callers that want to spell the step out.
inline Expr normalize(const Expr& e) { return e; }

struct FunctionCall {
  std::string name;
  std::vector<int> derivs;  // sorted, 0-based argument positions
  std::vector<Expr> args;
};

}  // namespace jetcalc
