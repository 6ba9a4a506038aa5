#include "jetcalc/expr.hpp"

#include <algorithm>

namespace jetcalc {

namespace {

const std::string kEmptyName;

std::strong_ordering compare_rational(const Rational& a, const Rational& b) {
  int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering compare_exprs(const std::vector<Expr>& a, const std::vector<Expr>& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

void merge_sorted(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return compare(a.monomial, b.monomial) < 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && compare(out.back().monomial, t.monomial) == 0) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return sgn(t.coeff) == 0; });
  terms = std::move(out);
}

}  // namespace

Atom Atom::base(int dir) {
  Atom a;
  a.kind_ = AtomKind::Base;
  a.index_ = static_cast<std::int16_t>(dir);
  return a;
}

Atom Atom::jet(int field, const MultiIndex& mu) {
  Atom a;
  a.kind_ = AtomKind::Jet;
  a.field_ = static_cast<std::int16_t>(field);
  a.mi_ = mu;
  return a;
}

Atom Atom::momentum(int field, const MultiIndex& mu, int last, const MultiIndex& deriv) {
  Atom a;
  a.kind_ = AtomKind::Momentum;
  a.field_ = static_cast<std::int16_t>(field);
  a.index_ = static_cast<std::int16_t>(last);
  a.mi_ = mu;
  a.deriv_ = deriv;
  return a;
}

Atom Atom::momentum(int field, const MultiIndex& mu, int last) {
  return momentum(field, mu, last, MultiIndex(mu.size()));
}

Atom Atom::symmetric_momentum(int field, const MultiIndex& mu) { return momentum(field, mu, -1); }

Atom Atom::multiplier(int index) {
  Atom a;
  a.kind_ = AtomKind::Multiplier;
  a.index_ = static_cast<std::int16_t>(index);
  return a;
}

Atom Atom::parameter(std::string name) {
  Atom a;
  a.kind_ = AtomKind::Parameter;
  a.payload_ = std::make_shared<const FunctionCall>(FunctionCall{std::move(name), {}, {}});
  return a;
}

Atom Atom::function(std::string name, std::vector<int> derivs, std::vector<Expr> args) {
  std::sort(derivs.begin(), derivs.end());
  for (int d : derivs) {
    if (d < 0 || static_cast<std::size_t>(d) >= args.size()) {
      throw Error("derivative marker " + std::to_string(d + 1) + " out of range for " + name);
    }
  }
  Atom a;
  a.kind_ = AtomKind::Function;
  a.payload_ = std::make_shared<const FunctionCall>(FunctionCall{std::move(name), std::move(derivs), std::move(args)});
  return a;
}

const std::string& Atom::name() const { return payload_ ? payload_->name : kEmptyName; }

const FunctionCall& Atom::call() const {
  if (!payload_ || kind_ != AtomKind::Function) throw std::logic_error("atom is not a function application");
  return *payload_;
}

Atom Atom::with_derivative(const MultiIndex& deriv) const {
  Atom a = *this;
  a.deriv_ = deriv;
  return a;
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  switch (a.kind_) {
    case AtomKind::Base:
    case AtomKind::Multiplier:
      return a.index_ <=> b.index_;
    case AtomKind::Jet:
      if (auto c = a.field_ <=> b.field_; c != 0) return c;
      if (auto c = a.mi_.order() <=> b.mi_.order(); c != 0) return c;
      return a.mi_ <=> b.mi_;
    case AtomKind::Momentum:
      if (auto c = a.field_ <=> b.field_; c != 0) return c;
      if (auto c = a.mi_.order() <=> b.mi_.order(); c != 0) return c;
      if (auto c = a.mi_ <=> b.mi_; c != 0) return c;
      if (auto c = a.index_ <=> b.index_; c != 0) return c;
      if (auto c = a.deriv_.order() <=> b.deriv_.order(); c != 0) return c;
      return a.deriv_ <=> b.deriv_;
    case AtomKind::Parameter:
      return a.payload_->name <=> b.payload_->name;
    case AtomKind::Function: {
      if (a.payload_ == b.payload_) return std::strong_ordering::equal;
      const auto& x = *a.payload_;
      const auto& y = *b.payload_;
      if (auto c = x.name <=> y.name; c != 0) return c;
      if (auto c = x.derivs.size() <=> y.derivs.size(); c != 0) return c;
      if (auto c = x.derivs <=> y.derivs; c != 0) return c;
      return compare_exprs(x.args, y.args);
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b) {
  int da = 0;
  int db = 0;
  for (const auto& [_, e] : a) da += e;
  for (const auto& [_, e] : b) db += e;
  if (auto c = da <=> db; c != 0) return c;
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a[i].first <=> b[i].first; c != 0) return c;
    if (auto c = b[i].second <=> a[i].second; c != 0) return c;
  }
  return a.size() <=> b.size();
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      int e = a[i].second + b[j].second;
      if (e != 0) out.emplace_back(a[i].first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

Expr::Expr(int value) : Expr(Rational(value)) {}

Expr::Expr(const Rational& value) {
  if (sgn(value) == 0) return;
  terms_.push_back({{}, value});
  terms_.back().coeff.canonicalize();
}

Expr::Expr(const Atom& atom) { terms_.push_back({{{atom, 1}}, Rational(1)}); }

Expr Expr::from_terms(std::vector<Term> terms) {
  for (auto& t : terms) {
    std::sort(t.monomial.begin(), t.monomial.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    Monomial merged;
    for (auto& p : t.monomial) {
      if (!merged.empty() && merged.back().first == p.first) {
        merged.back().second += p.second;
      } else {
        merged.push_back(p);
      }
    }
    std::erase_if(merged, [](const auto& p) { return p.second == 0; });
    t.monomial = std::move(merged);
  }
  merge_sorted(terms);
  Expr e;
  e.terms_ = std::move(terms);
  return e;
}

Expr Expr::monomial(Monomial m, const Rational& coeff) {
  std::vector<Term> t;
  t.push_back({std::move(m), coeff});
  return from_terms(std::move(t));
}

std::optional<Rational> Expr::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].monomial.empty()) return terms_[0].coeff;
  return std::nullopt;
}

Expr Expr::operator-() const {
  Expr e = *this;
  for (auto& t : e.terms_) t.coeff = -t.coeff;
  return e;
}

Expr& Expr::operator+=(const Expr& other) {
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  const auto& b = other.terms_;
  while (i < terms_.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(std::move(terms_[i++]));
      continue;
    }
    if (i == terms_.size()) {
      out.push_back(b[j++]);
      continue;
    }
    auto c = compare(terms_[i].monomial, b[j].monomial);
    if (c < 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c > 0) {
      out.push_back(b[j++]);
    } else {
      Rational s = terms_[i].coeff + b[j].coeff;
      if (sgn(s) != 0) out.push_back({std::move(terms_[i].monomial), s});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Expr& Expr::operator-=(const Expr& other) { return *this += -other; }

Expr& Expr::operator*=(const Expr& other) {
  *this = *this * other;
  return *this;
}

Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_zero() || b.is_zero()) return Expr();
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) out.push_back({multiply(x.monomial, y.monomial), x.coeff * y.coeff});
  }
  merge_sorted(out);
  Expr e;
  e.terms_ = std::move(out);
  return e;
}

Expr Expr::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (!is_monomial()) throw Error("division by a non-monomial expression is not supported");
  Monomial m = terms_[0].monomial;
  for (auto& p : m) p.second = -p.second;
  Expr e;
  e.terms_.push_back({std::move(m), 1 / terms_[0].coeff});
  return e;
}

Expr operator/(const Expr& a, const Expr& b) { return a * b.inverse(); }

Expr Expr::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Expr result(1);
  Expr base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

bool operator==(const Expr& a, const Expr& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Expr& a, const Expr& b) {
  if (auto c = a.terms_.size() <=> b.terms_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (auto c = compare(a.terms_[i].monomial, b.terms_[i].monomial); c != 0) return c;
    if (auto c = compare_rational(a.terms_[i].coeff, b.terms_[i].coeff); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace jetcalc
