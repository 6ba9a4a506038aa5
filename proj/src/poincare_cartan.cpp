#include "jetcalc/poincare_cartan.hpp"

#include "jetcalc/calculus.hpp"
#include "jetcalc/legendre.hpp"
#include "jetcalc/printer.hpp"

namespace jetcalc {

PCForm pc_form_from_hamiltonian(const LagrangianProblem& p, const Expr& H_slots) {
  PCForm out{ExteriorForm(static_cast<int>(p.n) + 1), ExteriorForm(static_cast<int>(p.n)), H_slots};
  ExteriorForm volume = ExteriorForm::volume(p.n);
  for (int f = 0; f < static_cast<int>(p.fields.size()); ++f) {
    for (const auto& mu : multi_indices_up_to(p.n, p.k - 1)) {
      ExteriorForm dphi = ExteriorForm::differential(Atom::jet(f, mu));
      for (std::size_t lam = 0; lam < p.n; ++lam) {
        Atom slot = Atom::momentum(f, mu, static_cast<int>(lam));
        ExteriorForm block = volume_block(p.n, static_cast<int>(lam), dphi);
        out.omega += wedge(ExteriorForm::differential(slot), block);
        out.theta += Expr(slot) * block;
      }
    }
  }
  out.omega -= wedge(differential(H_slots), volume);
  out.theta -= H_slots * volume;
  return out;
}

PCForm pc_form(const LagrangianProblem& p) { return pc_form_from_hamiltonian(p, legendre_top(p).H_slots); }

std::vector<Atom> phase_fibre_coordinates(const LagrangianProblem& p) {
  std::vector<Atom> out;
  for (int f = 0; f < static_cast<int>(p.fields.size()); ++f) {
    for (const auto& mu : multi_indices_up_to(p.n, p.k - 1)) out.push_back(Atom::jet(f, mu));
    for (const auto& mu : multi_indices_up_to(p.n, p.k - 1)) {
      for (std::size_t lam = 0; lam < p.n; ++lam) out.push_back(Atom::momentum(f, mu, static_cast<int>(lam)));
    }
  }
  return out;
}

EquationSet multisymplectic_residuals(const LagrangianProblem& p, const PCForm& form, const SectionData& sigma) {
  std::vector<Atom> coords = phase_fibre_coordinates(p);
  for (const auto& c : coords) {
    if (!sigma.contains(c)) throw Error("section does not assign " + print(c, p));
  }
  Factors volume;
  for (std::size_t i = 0; i < p.n; ++i) volume.push_back(Atom::base(static_cast<int>(i)));
  EquationSet out;
  for (const auto& c : coords) {
    VectorField X{{c, Expr(1)}};
    ExteriorForm pulled = pullback_section(interior_product(X, form.omega), sigma);
    out.push_back({"d/d" + print(c, p), pulled.coefficient(volume), Expr()});
  }
  return out;
}

EquationSet multisymplectic_residuals(const LagrangianProblem& p, const SectionData& sigma) {
  return multisymplectic_residuals(p, pc_form(p), sigma);
}

LagrangianProblem galilei_problem() {
  LagrangianProblem p;
  p.n = 1;
  p.base_names = {"t"};
  p.fields = {"q"};
  p.params = {"m", "V", "V1", "V2"};
  p.opaque["U"] = 2;
  p.k = 1;
  Expr t(Atom::base(0));
  Expr q(Atom::jet(0, MultiIndex{0}));
  Expr q1(Atom::jet(0, MultiIndex{1}));
  Expr m(Atom::parameter("m"));
  p.lagrangian = Rational(1, 2) * m * q1 * q1 - Expr(Atom::function("U", {}, {t, q}));
  return p;
}

bool GalileiReport::ok() const {
  for (const auto& r : residuals) {
    if (!r.value.is_zero()) return false;
  }
  return true;
}

namespace {

struct Frame {
  Expr position;
  Expr momentum;
  Expr hamiltonian;
};

ExteriorForm theta_of(const Frame& fr) {
  ExteriorForm dt = ExteriorForm::differential(Atom::base(0));
  return wedge(ExteriorForm::scalar(fr.momentum), differential(fr.position)) - fr.hamiltonian * dt;
}

Frame boosted(const Frame& fr, const Expr& velocity, const Expr& m, const Expr& U) {
  Expr t(Atom::base(0));
  Frame out;
  out.position = fr.position - velocity * t;
  out.momentum = fr.momentum - m * velocity;
  out.hamiltonian = out.momentum * out.momentum * (m.inverse() * Rational(1, 2)) + U;
  return out;
}

}  // namespace

GalileiReport galilei_transform_check() {
  LagrangianProblem p = galilei_problem();
  Expr t(Atom::base(0));
  Expr q(Atom::jet(0, MultiIndex{0}));
  Expr P(Atom::momentum(0, MultiIndex{0}, 0));
  Expr m(Atom::parameter("m"));
  Expr V(Atom::parameter("V"));
  Expr V1(Atom::parameter("V1"));
  Expr V2(Atom::parameter("V2"));
  Expr U(Atom::function("U", {}, {t, q}));
  Expr H = legendre_top(p).H_slots;

  Frame rest{q, P, H};
  Frame moving = boosted(rest, V, m, U);
  ExteriorForm theta = theta_of(rest);
  ExteriorForm theta_v = theta_of(moving);
  ExteriorForm dq = ExteriorForm::differential(Atom::jet(0, MultiIndex{0}));
  ExteriorForm dt = ExteriorForm::differential(Atom::base(0));
  ExteriorForm expected_shift = -(m * V) * dq + (Rational(1, 2) * m * V * V) * dt;

  GalileiReport report;
  report.residuals.push_back(
      {"H~ - (H - P V + m V^2/2)", ExteriorForm::scalar(moving.hamiltonian - (H - P * V + Rational(1, 2) * m * V * V))});
  report.residuals.push_back({"Theta~ - Theta + m V dq - m V^2/2 dt", theta_v - theta - expected_shift});
  report.residuals.push_back({"dTheta~ - dTheta", exterior_derivative(theta_v) - exterior_derivative(theta)});
  Frame identity = boosted(rest, Expr(), m, U);
  report.residuals.push_back({"Theta(V=0) - Theta", theta_of(identity) - theta});
  Frame twice = boosted(boosted(rest, V1, m, U), V2, m, U);
  Frame once = boosted(rest, V1 + V2, m, U);
  report.residuals.push_back({"Theta(V1 then V2) - Theta(V1 + V2)", theta_of(twice) - theta_of(once)});
  report.residuals.push_back(
      {"dTheta(V1 then V2) - dTheta", exterior_derivative(theta_of(twice)) - exterior_derivative(theta)});
  return report;
}

}  // namespace jetcalc
