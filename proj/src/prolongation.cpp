#include "jetcalc/prolongation.hpp"

#include "jetcalc/calculus.hpp"

namespace jetcalc {

VectorField prolong_vertical_field(const Symbols& s, const VerticalField& X, int order) {
  VectorField out;
  for (const auto& [field, psi] : X) {
    if (depends_on(psi, [](const Atom& a) { return a.kind() == AtomKind::Momentum; })) {
      throw Error("vertical fields must not depend on momenta");
    }
    std::map<MultiIndex, Expr> lifted;
    for (const auto& mu : multi_indices_up_to(s.n, order)) {
      Expr value;
      if (mu.is_zero()) {
        value = psi;
      } else {
        std::size_t dir = 0;
        while (!mu.has(dir)) ++dir;
        value = total_derivative(lifted.at(mu.lowered(dir)), static_cast<int>(dir));
      }
      lifted[mu] = value;
      if (!value.is_zero()) out[Atom::jet(field, mu)] = value;
    }
  }
  return out;
}

Expr evaluate_on_jet(const Expr& e, const std::map<int, Expr>& section) {
  return substitute(e, [&](const Atom& a) -> std::optional<Expr> {
    if (a.kind() == AtomKind::Momentum) throw Error("cannot evaluate momenta on a jet");
    if (a.kind() != AtomKind::Jet) return std::nullopt;
    auto it = section.find(a.field());
    if (it == section.end()) throw Error("section does not assign every field");
    return total_derivative(it->second, a.multi_index());
  });
}

HomogeneousPoly HomogeneousPoly::from_expr(const Expr& e, std::size_t vars) {
  HomogeneousPoly out;
  out.vars = vars;
  out.degree = -1;
  for (const auto& t : e.terms()) {
    MultiIndex mu(vars);
    Monomial rest;
    for (const auto& [a, p] : t.monomial) {
      if (a.kind() == AtomKind::Base && static_cast<std::size_t>(a.direction()) < vars) {
        if (p < 0) throw Error("negative power of a polynomial variable");
        mu.set(static_cast<std::size_t>(a.direction()), p);
      } else {
        if (depends_on(Expr(a), [&](const Atom& b) { return b.kind() == AtomKind::Base; })) {
          throw Error("polynomial coefficients must not depend on the variables");
        }
        rest.emplace_back(a, p);
      }
    }
    if (out.degree >= 0 && mu.order() != out.degree) throw Error("polynomial is not homogeneous");
    out.degree = mu.order();
    out.coeffs[mu] += Expr::monomial(rest, t.coeff);
    if (out.coeffs[mu].is_zero()) out.coeffs.erase(mu);
  }
  if (out.degree < 0) out.degree = 0;
  return out;
}

Expr HomogeneousPoly::to_expr() const {
  Expr out;
  for (const auto& [mu, c] : coeffs) {
    Expr m = c;
    for (std::size_t i = 0; i < vars; ++i) {
      if (mu[i] > 0) m = m * Expr(Atom::base(static_cast<int>(i))).pow(mu[i]);
    }
    out += m;
  }
  return out;
}

std::vector<HomogeneousPoly> polarize(const HomogeneousPoly& Q) {
  if (Q.degree < 1) throw Error("polarization needs degree at least 1");
  std::vector<HomogeneousPoly> out(Q.vars);
  Rational inv(1, Q.degree);
  for (std::size_t i = 0; i < Q.vars; ++i) {
    out[i].vars = Q.vars;
    out[i].degree = Q.degree - 1;
    for (const auto& [mu, c] : Q.coeffs) {
      if (!mu.has(i)) continue;
      out[i].coeffs[mu.lowered(i)] += Rational(inv * mu[i]) * c;
    }
    std::erase_if(out[i].coeffs, [](const auto& kv) { return kv.second.is_zero(); });
  }
  return out;
}

HomogeneousPoly resymmetrize(const std::vector<HomogeneousPoly>& P, int degree) {
  HomogeneousPoly out;
  out.vars = P.size();
  out.degree = degree;
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (P[i].degree != degree - 1) throw Error("polarization components have the wrong degree");
    for (const auto& [mu, c] : P[i].coeffs) out.coeffs[mu.raised(i)] += c;
  }
  std::erase_if(out.coeffs, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::vector<std::vector<Expr>> gram_matrix(const HomogeneousPoly& Q) {
  if (Q.degree != 2) throw Error("Gram matrix needs a quadratic form");
  auto P = polarize(Q);
  std::vector<std::vector<Expr>> B(Q.vars, std::vector<Expr>(Q.vars));
  for (std::size_t i = 0; i < Q.vars; ++i) {
    for (std::size_t j = 0; j < Q.vars; ++j) {
      auto it = P[i].coeffs.find(MultiIndex::unit(Q.vars, j));
      if (it != P[i].coeffs.end()) B[i][j] = it->second;
    }
  }
  return B;
}

}  // namespace jetcalc
