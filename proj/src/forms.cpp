#include "jetcalc/forms.hpp"

#include <algorithm>

#include "jetcalc/calculus.hpp"

namespace jetcalc {

namespace {

void check_basis(const Atom& c) {
  if (!c.is_coordinate() || (c.kind() == AtomKind::Momentum && !c.derivative().is_zero())) {
    throw Error("differentials exist only for base, jet and momentum coordinates");
  }
}

/// Sorts factors in place; returns the permutation sign or 0 on a repeat.
int sort_sign(Factors& f) {
  int sign = 1;
  for (std::size_t i = 1; i < f.size(); ++i) {
    for (std::size_t j = i; j > 0 && f[j] < f[j - 1]; --j) {
      std::swap(f[j], f[j - 1]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (f[i] == f[i - 1]) return 0;
  }
  return sign;
}

}  // namespace

ExteriorForm ExteriorForm::scalar(const Expr& f) {
  ExteriorForm out(0);
  out.add_term({}, f);
  return out;
}

ExteriorForm ExteriorForm::differential(const Atom& c) {
  check_basis(c);
  ExteriorForm out(1);
  out.add_term({c}, Expr(1));
  return out;
}

ExteriorForm ExteriorForm::term(const Expr& c, const std::vector<Atom>& factors) {
  for (const auto& a : factors) check_basis(a);
  Factors f = factors;
  int s = sort_sign(f);
  ExteriorForm out(static_cast<int>(factors.size()));
  if (s != 0) out.add_term(std::move(f), s > 0 ? c : -c);
  return out;
}

ExteriorForm ExteriorForm::volume(std::size_t n) {
  Factors f;
  for (std::size_t i = 0; i < n; ++i) f.push_back(Atom::base(static_cast<int>(i)));
  return term(Expr(1), f);
}

Expr ExteriorForm::coefficient(const Factors& f) const {
  Factors sorted = f;
  int s = sort_sign(sorted);
  if (s == 0) return Expr();
  auto it = terms_.find(sorted);
  if (it == terms_.end()) return Expr();
  return s > 0 ? it->second : -it->second;
}

void ExteriorForm::add_term(Factors f, Expr c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(f), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExteriorForm& ExteriorForm::operator+=(const ExteriorForm& other) {
  if (other.degree_ != degree_) throw Error("cannot add forms of different degrees");
  for (const auto& [f, c] : other.terms_) add_term(f, c);
  return *this;
}

ExteriorForm& ExteriorForm::operator-=(const ExteriorForm& other) { return *this += -other; }

ExteriorForm ExteriorForm::operator-() const {
  ExteriorForm out = *this;
  for (auto& [_, c] : out.terms_) c = -c;
  return out;
}

ExteriorForm operator*(const Expr& c, const ExteriorForm& a) {
  ExteriorForm out(a.degree_);
  for (const auto& [f, x] : a.terms_) out.add_term(f, c * x);
  return out;
}

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
  ExteriorForm out(a.degree() + b.degree());
  for (const auto& [fa, ca] : a.terms()) {
    for (const auto& [fb, cb] : b.terms()) {
      Factors f = fa;
      f.insert(f.end(), fb.begin(), fb.end());
      out += ExteriorForm::term(ca * cb, f);
    }
  }
  return out;
}

ExteriorForm differential(const Expr& f) {
  ExteriorForm out(1);
  for (const auto& a : all_atoms_of(f)) {
    if (!a.is_coordinate()) continue;
    if (a.kind() == AtomKind::Momentum && !a.derivative().is_zero()) {
      throw Error("differential of a derived momentum atom is undefined");
    }
    out += ExteriorForm::term(partial_derivative(f, a), {a});
  }
  return out;
}

ExteriorForm exterior_derivative(const ExteriorForm& a) {
  ExteriorForm out(a.degree() + 1);
  for (const auto& [f, c] : a.terms()) {
    ExteriorForm basis = ExteriorForm::term(Expr(1), f);
    out += wedge(differential(c), basis);
  }
  return out;
}

ExteriorForm interior_product(const VectorField& X, const ExteriorForm& a) {
  if (a.degree() < 1) throw Error("interior product needs a form of degree at least 1");
  ExteriorForm out(a.degree() - 1);
  for (const auto& [f, c] : a.terms()) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      auto it = X.find(f[i]);
      if (it == X.end() || it->second.is_zero()) continue;
      Factors rest = f;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      Expr coeff = it->second * c;
      out += ExteriorForm::term(i % 2 == 0 ? coeff : -coeff, rest);
    }
  }
  return out;
}

ExteriorForm pullback_section(const ExteriorForm& a, const SectionData& sigma) {
  auto image = [&](const Atom& c) -> std::optional<Expr> {
    if (!c.is_fibre()) return std::nullopt;
    auto it = sigma.find(c);
    if (it == sigma.end()) {
      if (c.kind() == AtomKind::Momentum && !c.derivative().is_zero()) {
        auto base = sigma.find(c.with_derivative(MultiIndex(c.derivative().size())));
        if (base != sigma.end()) return total_derivative(base->second, c.derivative());
      }
      throw Error("section does not assign a fibre coordinate appearing in the form");
    }
    return it->second;
  };
  ExteriorForm out(a.degree());
  for (const auto& [f, c] : a.terms()) {
    ExteriorForm piece = ExteriorForm::scalar(substitute(c, image));
    for (const auto& atom : f) {
      ExteriorForm one(1);
      if (atom.kind() == AtomKind::Base) {
        one = ExteriorForm::differential(atom);
      } else {
        Expr value = *image(atom);
        for (std::size_t mu = 0; mu < atom.multi_index().size(); ++mu) {
          Atom x = Atom::base(static_cast<int>(mu));
          one += ExteriorForm::term(partial_derivative(value, x), {x});
        }
      }
      piece = wedge(piece, one);
    }
    out += piece;
  }
  return out;
}

ExteriorForm volume_block(std::size_t n, int lambda, const ExteriorForm& alpha) {
  if (alpha.degree() != 1) throw Error("volume block expects a one-form");
  ExteriorForm out = ExteriorForm::scalar(Expr(1));
  for (std::size_t mu = 0; mu < n; ++mu) {
    if (static_cast<int>(mu) == lambda) {
      out = wedge(out, alpha);
    } else {
      out = wedge(out, ExteriorForm::differential(Atom::base(static_cast<int>(mu))));
    }
  }
  return out;
}

}  // namespace jetcalc
