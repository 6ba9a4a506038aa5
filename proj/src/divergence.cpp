#include "jetcalc/divergence.hpp"

#include <algorithm>

#include "jetcalc/calculus.hpp"
#include "jetcalc/printer.hpp"

namespace jetcalc {

namespace {

void check_components(const Symbols& s, const std::vector<Expr>& F) {
  if (F.size() != s.n) throw Error("divergence needs one component per base direction");
  for (const auto& f : F) {
    if (depends_on(f, [](const Atom& a) { return a.kind() == AtomKind::Momentum || a.kind() == AtomKind::Multiplier; })) {
      throw Error("divergence components must not contain momentum or multiplier atoms");
    }
  }
}

int order_of(const std::vector<Expr>& F) {
  int top = 0;
  for (const auto& f : F) top = std::max(top, max_jet_order(f) + 1);
  return std::max(top, 1);
}

}  // namespace

DivergenceData divergence_lagrangian(const Symbols& s, const std::vector<Expr>& F) {
  check_components(s, F);
  DivergenceData out;
  out.F = F;
  out.l = order_of(F);
  for (std::size_t lam = 0; lam < F.size(); ++lam) out.L0 += total_derivative(F[lam], static_cast<int>(lam));
  return out;
}

MomentumAssignment trivial_momenta(const Symbols& s, const std::vector<Expr>& F) {
  check_components(s, F);
  int l = order_of(F);
  MomentumAssignment m(s.n, s.fields.size(), l);
  const auto grid = m.slots();
  for (const auto& [key, _] : grid) {
    m.set(key, partial_derivative(F[static_cast<std::size_t>(key.last)], Atom::jet(key.field, key.mu)));
  }
  return m;
}

bool DivergenceCheck::ok() const {
  if (!all_residuals_zero(residual_table)) return false;
  return std::all_of(euler_lagrange.begin(), euler_lagrange.end(), [](const Expr& e) { return e.is_zero(); });
}

DivergenceCheck verify_divergence_trivial(const Symbols& s, const std::vector<Expr>& F) {
  DivergenceCheck out;
  out.data = divergence_lagrangian(s, F);
  MomentumAssignment m = trivial_momenta(s, F);
  int l = out.data.l;
  for (int f = 0; f < static_cast<int>(s.fields.size()); ++f) {
    for (const auto& mu : multi_indices_up_to(s.n, l)) {
      Expr r = partial_derivative(out.data.L0, Atom::jet(f, mu));
      if (mu.order() < l) {
        for (std::size_t lam = 0; lam < s.n; ++lam) {
          r -= total_derivative(m.at(f, mu, static_cast<int>(lam)), static_cast<int>(lam));
        }
      }
      Expr sym = mu.is_zero() ? Expr() : m.symmetrized(f, mu);
      out.residual_table.push_back({"E-L table " + print(Atom::jet(f, mu), s), r, sym});
    }
  }
  LagrangianProblem p;
  static_cast<Symbols&>(p) = s;
  p.k = l;
  p.lagrangian = out.data.L0;
  out.euler_lagrange = euler_lagrange(p);
  return out;
}

MomentumAssignment momentum_shift(const MomentumAssignment& m, const std::vector<Expr>& F, ShiftDirection direction) {
  if (F.size() != m.n()) throw Error("divergence needs one component per base direction");
  int order = std::max(m.k(), order_of(F));
  MomentumAssignment out = m.extended(order);
  const auto grid = out.slots();
  for (const auto& [key, _] : grid) {
    Expr d = partial_derivative(F[static_cast<std::size_t>(key.last)], Atom::jet(key.field, key.mu));
    if (d.is_zero()) continue;
    out.add(key, direction == ShiftDirection::Forward ? d : -d);
  }
  return out;
}

EquationSet evaluate_cascade(const LagrangianProblem& p, const MomentumAssignment& m) {
  EquationSet out;
  for (const auto& eq : cascade_equations(p)) {
    out.push_back({eq.label, substitute_momenta(eq.lhs, m), substitute_momenta(eq.rhs, m)});
  }
  return out;
}

EquationSet verify_momentum_shift(const LagrangianProblem& p, const std::vector<Expr>& F) {
  DivergenceData d = divergence_lagrangian(p, F);
  LagrangianProblem shifted = p;
  shifted.k = std::max(p.k, d.l);
  shifted.lagrangian = p.lagrangian + d.L0;
  MomentumAssignment m = canonical_momenta(p);
  MomentumAssignment moved = momentum_shift(m, F, ShiftDirection::Forward);
  std::vector<Expr> before = cascade_residual(p, m);
  EquationSet out;
  for (const auto& eq : evaluate_cascade(shifted, moved)) {
    if (eq.label.starts_with("EL ")) {
      int f = p.field_index(eq.label.substr(3));
      out.push_back({eq.label, eq.rhs, before[static_cast<std::size_t>(f)]});
    } else {
      out.push_back(eq);
    }
  }
  return out;
}

}  // namespace jetcalc
