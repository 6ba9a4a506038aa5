#include "jetcalc/verification.hpp"

#include <functional>

#include "jetcalc/calculus.hpp"
#include "jetcalc/divergence.hpp"
#include "jetcalc/forms.hpp"
#include "jetcalc/legendre.hpp"
#include "jetcalc/parser.hpp"
#include "jetcalc/poincare_cartan.hpp"
#include "jetcalc/printer.hpp"
#include "jetcalc/prolongation.hpp"
#include "jetcalc/random.hpp"
#include "jetcalc/variational.hpp"

namespace jetcalc {

namespace {

class Suite {
 public:
  Suite(std::string name, std::vector<SuiteResult>& out) : out_(out) { result_.name = std::move(name); }
  ~Suite() { out_.push_back(result_); }

  void check(bool ok, const std::function<std::string()>& detail) {
    ++result_.instances;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = detail();
    }
  }

  void zero(const Expr& e, const Symbols& s, const std::string& what) {
    check(e.is_zero(), [&] { return what + ": " + print(e, s); });
  }

 private:
  SuiteResult result_;
  std::vector<SuiteResult>& out_;
};

void core_suites(RandomSource& rng, std::vector<SuiteResult>& out) {
  {
    Suite s("commutator of partial and total derivatives", out);
    for (int i = 0; i < 30; ++i) {
      std::size_t n = static_cast<std::size_t>(rng.uniform(1, 2));
      LagrangianProblem p = rng.lagrangian(n, 3, 3);
      for (const auto& sigma : multi_indices_up_to(n, 3)) {
        for (std::size_t lam = 0; lam < n; ++lam) {
          int l = static_cast<int>(lam);
          Atom c = Atom::jet(0, sigma);
          Expr lhs = partial_derivative(total_derivative(p.lagrangian, l), c) -
                     total_derivative(partial_derivative(p.lagrangian, c), l);
          if (sigma.has(lam)) lhs -= partial_derivative(p.lagrangian, Atom::jet(0, sigma.lowered(lam)));
          s.zero(lhs, p, "commutator");
        }
      }
    }
  }
  {
    Suite s("total derivatives commute", out);
    for (int i = 0; i < 30; ++i) {
      LagrangianProblem p = rng.lagrangian(2, 2, 3);
      s.zero(total_derivative(total_derivative(p.lagrangian, 0), 1) - total_derivative(total_derivative(p.lagrangian, 1), 0),
             p, "D1 D2 - D2 D1");
    }
  }
  {
    Suite s("parse print round trip", out);
    for (int i = 0; i < 30; ++i) {
      std::size_t n = static_cast<std::size_t>(rng.uniform(1, 2));
      LagrangianProblem p = rng.lagrangian(n, 2, 3);
      p.params = {"m"};
      p.opaque["U"] = 2;
      Expr e = p.lagrangian * Expr(Atom::parameter("m")) +
               Expr(Atom::function("U", {1}, {Expr(Atom::base(0)), p.lagrangian})) -
               make_rational(rng.nonzero(), 7) * Expr(Atom::momentum(0, MultiIndex(n), 0));
      std::string text = print(e, p);
      Expr back = parse_expr(text, p, -1);
      s.check(back == e && print(back, p) == text, [&] { return text; });
    }
  }
  {
    Suite s("multinomial weights sum to n^l", out);
    for (std::size_t n = 1; n <= 3; ++n) {
      for (int l = 0; l <= 5; ++l) {
        long long sum = 0;
        long long expected = 1;
        for (int i = 0; i < l; ++i) expected *= static_cast<long long>(n);
        for (const auto& mu : multi_indices_of_order(n, l)) sum += multinomial_weight(mu);
        s.check(sum == expected, [&] { return "n=" + std::to_string(n) + " l=" + std::to_string(l); });
      }
    }
  }
}

ExteriorForm random_form(RandomSource& rng, const std::vector<Atom>& coords, int degree) {
  ExteriorForm out(degree);
  for (int t = 0; t < 3; ++t) {
    std::vector<Atom> f;
    for (int d = 0; d < degree; ++d) f.push_back(coords[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(coords.size()) - 1))]);
    out += ExteriorForm::term(rng.polynomial(coords, 2, 2), f);
  }
  return out;
}

void form_suites(RandomSource& rng, std::vector<SuiteResult>& out) {
  Symbols sym = Symbols::standard(2, {"u"});
  std::vector<Atom> coords = {Atom::base(0), Atom::base(1), Atom::jet(0, MultiIndex{0, 0}),
                              Atom::jet(0, MultiIndex{1, 0}), Atom::momentum(0, MultiIndex{0, 0}, 0),
                              Atom::momentum(0, MultiIndex{0, 0}, 1)};
  {
    Suite s("dd = 0", out);
    for (int i = 0; i < 20; ++i) {
      ExteriorForm a = random_form(rng, coords, rng.uniform(0, 2));
      s.check(exterior_derivative(exterior_derivative(a)).is_zero(), [&] { return print(a, sym); });
    }
  }
  {
    Suite s("X _| X _| a = 0", out);
    for (int i = 0; i < 20; ++i) {
      ExteriorForm a = random_form(rng, coords, 2);
      VectorField X;
      for (const auto& c : coords) X[c] = rng.polynomial(coords, 1, 2);
      s.check(interior_product(X, interior_product(X, a)).is_zero(), [&] { return print(a, sym); });
    }
  }
  {
    Suite s("pullback commutes with wedge and d", out);
    for (int i = 0; i < 15; ++i) {
      SectionData sigma;
      for (std::size_t c = 2; c < coords.size(); ++c) sigma[coords[c]] = rng.section(2, 2);
      ExteriorForm a = random_form(rng, coords, 1);
      ExteriorForm b = random_form(rng, coords, 1);
      ExteriorForm w = pullback_section(wedge(a, b), sigma) - wedge(pullback_section(a, sigma), pullback_section(b, sigma));
      ExteriorForm d = pullback_section(exterior_derivative(a), sigma) - exterior_derivative(pullback_section(a, sigma));
      s.check(w.is_zero() && d.is_zero(), [&] { return print(a, sym) + " ; " + print(b, sym); });
    }
  }
}

void variational_suites(RandomSource& rng, std::vector<SuiteResult>& out) {
  {
    Suite s("cascade and classical Euler-Lagrange agree", out);
    for (int i = 0; i < 50; ++i) {
      LagrangianProblem p = rng.lagrangian(static_cast<std::size_t>(rng.uniform(1, 2)), rng.uniform(1, 3), 2);
      s.zero(cascade_residual(p, canonical_momenta(p))[0] - euler_lagrange(p)[0], p, print(p.lagrangian, p));
    }
  }
  {
    Suite s("gauge invariance of equations and currents", out);
    for (int i = 0; i < 20; ++i) {
      std::size_t n = static_cast<std::size_t>(rng.uniform(1, 2));
      LagrangianProblem p = rng.lagrangian(n, rng.uniform(2, 3), 2);
      MomentumAssignment m = canonical_momenta(p);
      MomentumAssignment moved = apply_momentum_gauge(m, rng.gauge(n, p.k, 1));
      s.zero(cascade_residual(p, moved)[0] - cascade_residual(p, m)[0], p, "residual");
      s.check(currents(p, moved) == currents(p, m), [&] { return print(p.lagrangian, p); });
      MomentumAssignment g = symmetrize_momenta(moved);
      s.zero(cascade_residual(p, g)[0] - cascade_residual(p, m)[0], p, "residual");
      s.check(currents(p, g) == currents(p, m), [&] { return print(p.lagrangian, p); });
    }
  }
  {
    Suite s("dummy field yields vanishing rows", out);
    for (int i = 0; i < 10; ++i) {
      LagrangianProblem p = rng.lagrangian(static_cast<std::size_t>(rng.uniform(1, 2)), rng.uniform(1, 2), 2);
      p.fields.push_back("w");
      MomentumAssignment m = canonical_momenta(p);
      for (const auto& eq : evaluate_cascade(p, m)) {
        if (eq.label.find("w") == std::string::npos) continue;
        s.zero(eq.rhs, p, eq.label);
      }
    }
  }
  {
    Suite s("psi reduction sees only the trace", out);
    for (int i = 0; i < 10; ++i) {
      std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
      std::vector<Expr> p(n);
      std::vector<std::vector<Expr>> dp(n, std::vector<Expr>(n));
      for (std::size_t a = 0; a < n; ++a) {
        p[a] = Expr(rng.uniform(-5, 5));
        for (std::size_t b = 0; b < n; ++b) dp[a][b] = Expr(rng.uniform(-5, 5));
      }
      PsiReduction first = psi_reduction(p, dp);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (a != b) dp[a][b] = Expr(rng.uniform(-5, 5));
        }
      }
      PsiReduction second = psi_reduction(p, dp);
      s.check(first.trace == second.trace && first.momenta == second.momenta, [] { return "off-diagonal dependence"; });
    }
  }
}

void legendre_suites(RandomSource& rng, std::vector<SuiteResult>& out) {
  {
    Suite s("double Legendre is the identity", out);
    for (int i = 0; i < 15; ++i) {
      std::size_t n = static_cast<std::size_t>(rng.uniform(1, 2));
      LagrangianProblem p = rng.quadratic_lagrangian(n, rng.uniform(1, 2));
      LegendreData d = legendre_top(p);
      std::vector<Atom> xs;
      std::vector<Atom> ys;
      for (const auto& nu : multi_indices_of_order(n, p.k)) {
        xs.push_back(Atom::symmetric_momentum(0, nu));
        ys.push_back(Atom::jet(0, nu));
      }
      s.zero(legendre_exchange(d.h, xs, ys).transform - p.lagrangian, p, print(p.lagrangian, p));
    }
  }
  {
    Suite s("Hamilton and Lagrange cascades share the eliminated residual", out);
    for (int i = 0; i < 15; ++i) {
      std::size_t n = static_cast<std::size_t>(rng.uniform(1, 2));
      LagrangianProblem p = rng.quadratic_lagrangian(n, rng.uniform(1, 2));
      MomentumAssignment m = canonical_momenta(p);
      Expr el;
      for (const auto& eq : hamilton_equations(p)) {
        if (eq.label.starts_with("EL ")) el = substitute_momenta(eq.rhs, m);
      }
      s.zero(el - euler_lagrange(p)[0], p, print(p.lagrangian, p));
    }
  }
  {
    Suite s("Legendre inversion identities", out);
    for (int i = 0; i < 15; ++i) {
      std::size_t n = static_cast<std::size_t>(rng.uniform(1, 2));
      LagrangianProblem p = rng.quadratic_lagrangian(n, rng.uniform(1, 2));
      LegendreData d = legendre_top(p);
      Expr pairing;
      for (const auto& nu : multi_indices_of_order(n, p.k)) {
        Atom x = Atom::jet(0, nu);
        pairing += Expr(Atom::symmetric_momentum(0, nu)) * d.inversion.at(x);
        s.zero(partial_derivative(d.h, Atom::symmetric_momentum(0, nu)) - d.inversion.at(x), p, "dh/dp");
      }
      s.zero(d.h - (pairing - substitute(p.lagrangian, d.inversion)), p, "h");
    }
  }
}

void pc_suites(RandomSource& rng, std::vector<SuiteResult>& out) {
  {
    Suite s("d Omega = 0 and d Theta = Omega", out);
    for (int i = 0; i < 8; ++i) {
      std::size_t n = static_cast<std::size_t>(rng.uniform(1, 2));
      LagrangianProblem p = rng.quadratic_lagrangian(n, rng.uniform(1, 2));
      PCForm f = pc_form(p);
      s.check(exterior_derivative(f.omega).is_zero() && (exterior_derivative(f.theta) - f.omega).is_zero(),
              [&] { return print(p.lagrangian, p); });
    }
  }
  {
    Suite s("multisymplectic residuals on solutions and perturbations", out);
    LagrangianProblem p;
    static_cast<Symbols&>(p) = Symbols::standard(1, {"u"});
    p.k = 2;
    Expr u2(Atom::jet(0, MultiIndex{2}));
    p.lagrangian = Rational(1, 2) * u2 * u2;
    PCForm form = pc_form(p);
    for (int i = 0; i < 10; ++i) {
      Expr u;
      for (int d = 0; d <= 3; ++d) u += Expr(rng.uniform(-3, 3)) * Expr(Atom::base(0)).pow(d);
      SectionData sigma;
      sigma[Atom::jet(0, MultiIndex{0})] = u;
      sigma[Atom::jet(0, MultiIndex{1})] = total_derivative(u, 0);
      sigma[Atom::momentum(0, MultiIndex{1}, 0)] = total_derivative(u, MultiIndex{2});
      sigma[Atom::momentum(0, MultiIndex{0}, 0)] = -total_derivative(u, MultiIndex{3});
      s.check(all_residuals_zero(multisymplectic_residuals(p, form, sigma)), [&] { return print(u, p); });
      Atom victim = rng.uniform(0, 1) ? Atom::momentum(0, MultiIndex{1}, 0) : Atom::jet(0, MultiIndex{1});
      sigma[victim] += Expr(rng.nonzero());
      s.check(!all_residuals_zero(multisymplectic_residuals(p, form, sigma)), [&] { return "perturbed " + print(u, p); });
    }
  }
  {
    Suite s("Galilei boost", out);
    GalileiReport r = galilei_transform_check();
    LagrangianProblem g = galilei_problem();
    for (const auto& item : r.residuals) s.check(item.value.is_zero(), [&] { return item.label + ": " + print(item.value, g); });
  }
}

void divergence_suites(RandomSource& rng, std::vector<SuiteResult>& out) {
  {
    Suite s("divergence Lagrangians are trivial", out);
    for (int i = 0; i < 50; ++i) {
      std::size_t n = static_cast<std::size_t>(rng.uniform(1, 2));
      Symbols sym = Symbols::standard(n, {"u"});
      auto F = rng.divergence_components(n, rng.uniform(0, 1));
      DivergenceCheck c = verify_divergence_trivial(sym, F);
      s.check(c.ok(), [&] { return print(c.data.L0, sym); });
    }
  }
  {
    Suite s("momentum shift maps cascade solutions to solutions", out);
    for (int i = 0; i < 20; ++i) {
      std::size_t n = static_cast<std::size_t>(rng.uniform(1, 2));
      LagrangianProblem p = rng.quadratic_lagrangian(n, rng.uniform(1, 2));
      auto F = rng.divergence_components(n, rng.uniform(0, p.k));
      LagrangianProblem shifted = p;
      DivergenceData d = divergence_lagrangian(p, F);
      shifted.k = std::max(p.k, d.l);
      shifted.lagrangian += d.L0;
      s.zero(euler_lagrange(shifted)[0] - euler_lagrange(p)[0], p, "E(L + L0) - E(L)");
      s.check(all_residuals_zero(verify_momentum_shift(p, F)), [&] { return print(p.lagrangian, p); });
      MomentumAssignment m = rng.momenta(n, p.k, 1).extended(shifted.k);
      s.check(momentum_shift(momentum_shift(m, F, ShiftDirection::Forward), F, ShiftDirection::Inverse) == m,
              [] { return "shift then unshift"; });
    }
  }
}

void prolongation_suites(RandomSource& rng, std::vector<SuiteResult>& out) {
  {
    Suite s("prolongation preserves contact", out);
    for (int i = 0; i < 20; ++i) {
      std::size_t n = static_cast<std::size_t>(rng.uniform(1, 2));
      int order = rng.uniform(1, 3);
      Symbols sym = Symbols::standard(n, {"u"});
      Expr psi = rng.vertical_component(n, 1);
      VectorField lift = prolong_vertical_field(sym, {{0, psi}}, order);
      std::map<int, Expr> section{{0, rng.section(n, 3)}};
      Expr along = evaluate_on_jet(psi, section);
      for (const auto& mu : multi_indices_up_to(n, order)) {
        auto it = lift.find(Atom::jet(0, mu));
        Expr component = it == lift.end() ? Expr() : evaluate_on_jet(it->second, section);
        s.zero(component - total_derivative(along, mu), sym, "contact");
      }
    }
  }
  {
    Suite s("polarization re-symmetrizes to Q", out);
    for (int i = 0; i < 20; ++i) {
      HomogeneousPoly q = rng.homogeneous(static_cast<std::size_t>(rng.uniform(1, 3)), rng.uniform(1, 4));
      s.check(resymmetrize(polarize(q), q.degree) == q, [] { return "polarization"; });
    }
  }
}

}  // namespace

std::vector<SuiteResult> run_verification(std::uint64_t seed) {
  RandomSource rng(seed);
  std::vector<SuiteResult> out;
  core_suites(rng, out);
  form_suites(rng, out);
  variational_suites(rng, out);
  legendre_suites(rng, out);
  pc_suites(rng, out);
  divergence_suites(rng, out);
  prolongation_suites(rng, out);
  return out;
}

}  // namespace jetcalc
