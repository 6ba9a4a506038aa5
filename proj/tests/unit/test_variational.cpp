#include <gtest/gtest.h>

#include "jetcalc/variational.hpp"
#include "support.hpp"

using namespace jetcalc;
using testing_support::ex;
using testing_support::Gen;
using testing_support::problem;

namespace {

Expr find_rhs(const EquationSet& eqs, const std::string& label) {
  for (const auto& eq : eqs) {
    if (eq.label == label) return eq.rhs;
  }
  ADD_FAILURE() << "missing row " << label;
  return {};
}

LagrangianProblem random_problem(Gen& g, std::size_t n, int k) {
  LagrangianProblem p;
  static_cast<Symbols&>(p) = Symbols::standard(n, {"u"});
  p.k = k;
  p.lagrangian = g.poly(testing_support::jets_up_to(n, k), 2, 5);
  return p;
}

}  // namespace

TEST(CanonicalMomenta, Beam) {
  auto p = problem(1, 2, "1/2*u[2]^2");
  MomentumAssignment m = canonical_momenta(p);
  EXPECT_EQ(m.at(0, MultiIndex{1}, 0), ex("u[2]", p));
  EXPECT_EQ(m.top(0, MultiIndex{2}), ex("u[2]", p));
  EXPECT_EQ(m.at(0, MultiIndex{0}, 0), ex("-u[3]", p));
}

TEST(CanonicalMomenta, MechanicsAndConstant) {
  auto p = testing_support::mechanics();
  EXPECT_EQ(canonical_momenta(p).at(0, MultiIndex{0}, 0), ex("m*q[1]", p));
  auto c = problem(2, 2, "5");
  EXPECT_TRUE(canonical_momenta(c).is_zero());
}

TEST(CanonicalMomenta, SymmetricRepresentativeInTwoDimensions) {
  auto p = problem(2, 2, "u[1,1]^2");
  MomentumAssignment m = canonical_momenta(p);
  EXPECT_EQ(m.at(0, MultiIndex{1, 0}, 1), ex("u[1,1]", p));
  EXPECT_EQ(m.at(0, MultiIndex{0, 1}, 0), ex("u[1,1]", p));
  EXPECT_EQ(m.symmetrized(0, MultiIndex{1, 1}), ex("2*u[1,1]", p));
  EXPECT_EQ(symmetric_slot_weight(MultiIndex{1, 0}, 1), make_rational(1, 2));
  EXPECT_EQ(symmetric_slot_weight(MultiIndex{1, 0}, 0), Rational(1));
}

TEST(Currents, Beam) {
  auto p = problem(1, 2, "1/2*u[2]^2");
  CurrentTable j = currents(p, canonical_momenta(p));
  EXPECT_EQ(j.at({0, MultiIndex{2}}), ex("u[2]", p));
  EXPECT_TRUE(j.at({0, MultiIndex{1}}).is_zero());
  EXPECT_EQ(j.at({0, MultiIndex{0}}), ex("-u[4]", p));
  MomentumAssignment zero(1, 1, 2);
  for (const auto& [key, value] : currents(p, zero)) EXPECT_TRUE(value.is_zero());
}

TEST(CascadeEquations, Examples) {
  auto mech = testing_support::mechanics();
  EquationSet eqs = cascade_equations(mech);
  ASSERT_EQ(eqs.size(), 2u);
  EXPECT_EQ(find_rhs(eqs, "p_q[1]"), ex("m*q[1]", mech));
  EXPECT_EQ(find_rhs(eqs, "EL q"), ex("-U_{,2}(t, q) - p_q[0;1|1]", mech));

  auto beam = problem(1, 2, "1/2*u[2]^2");
  eqs = cascade_equations(beam);
  ASSERT_EQ(eqs.size(), 3u);
  EXPECT_EQ(eqs.back().label, "EL u");
  EXPECT_EQ(eqs.back().rhs, ex("-p_u[0;1|1]", beam));

  auto zero = problem(1, 2, "0");
  for (const auto& eq : cascade_equations(zero)) {
    EXPECT_TRUE(substitute_momenta(eq.rhs, MomentumAssignment(1, 1, 2)).is_zero());
  }
}

TEST(EulerLagrange, Examples) {
  auto beam = problem(1, 2, "1/2*u[2]^2");
  EXPECT_EQ(euler_lagrange(beam)[0], ex("u[4]", beam));
  auto mech = testing_support::mechanics();
  EXPECT_EQ(euler_lagrange(mech)[0], ex("-m*q[2] - U_{,2}(t, q)", mech));
  auto total = problem(1, 2, "u[1]^2 + u*u[2]");
  EXPECT_TRUE(euler_lagrange(total)[0].is_zero());
}

TEST(EulerLagrange, MatchesIndexListOracle) {
  Gen g(21);
  for (int i = 0; i < 40; ++i) {
    std::size_t n = static_cast<std::size_t>(g.integer(1, 2));
    auto p = random_problem(g, n, g.integer(1, 3));
    EXPECT_EQ(euler_lagrange(p)[0], testing_support::index_list_euler_lagrange(p, 0));
    EXPECT_EQ(cascade_residual(p, canonical_momenta(p))[0], euler_lagrange(p)[0]);
  }
}

TEST(EulerLagrange, SeveralFields) {
  auto p = problem(1, 1, "u[1]*v[1] - u^2*v", {"u", "v"});
  auto el = euler_lagrange(p);
  EXPECT_EQ(el[0], ex("-v[2] - 2*u*v", p));
  EXPECT_EQ(el[1], ex("-u[2] - u^2", p));
  EXPECT_EQ(cascade_residual(p, canonical_momenta(p)), el);
}

TEST(Holonomy, Examples) {
  auto p = problem(1, 2, "1/2*u[2]^2");
  SectionData good{{Atom::jet(0, MultiIndex{0}), ex("x1^2", p)}, {Atom::jet(0, MultiIndex{1}), ex("2*x1", p)}};
  EXPECT_TRUE(all_residuals_zero(holonomy_residual(p, good)));
  SectionData bad{{Atom::jet(0, MultiIndex{0}), ex("x1^2", p)}, {Atom::jet(0, MultiIndex{1}), ex("x1", p)}};
  auto eqs = holonomy_residual(p, bad);
  ASSERT_FALSE(eqs.empty());
  EXPECT_EQ(eqs.front().label, "holonomy u dx1");
  EXPECT_EQ(eqs.front().residual(), ex("x1", p));
  SectionData constant{{Atom::jet(0, MultiIndex{0}), Expr(4)}, {Atom::jet(0, MultiIndex{1}), Expr(7)}};
  EXPECT_EQ(holonomy_residual(p, constant).front().residual(), Expr(-7));
}

TEST(Gauge, Examples) {
  auto p = problem(2, 2, "1/2*u[1,1]^2 + u*u[2,0]");
  MomentumAssignment m = canonical_momenta(p);
  MomentumAssignment chi(2, 1, 2);
  chi.set(0, MultiIndex{1, 0}, 1, Expr(1));
  chi.set(0, MultiIndex{0, 1}, 0, Expr(-1));
  MomentumAssignment shifted = apply_momentum_gauge(m, chi);
  for (std::size_t d = 0; d < 2; ++d) {
    EXPECT_EQ(shifted.at(0, MultiIndex{0, 0}, static_cast<int>(d)), m.at(0, MultiIndex{0, 0}, static_cast<int>(d)));
  }
  EXPECT_EQ(apply_momentum_gauge(m, MomentumAssignment(2, 1, 2)), m);

  Expr f = ex("x1^2*x2 + u", p);
  MomentumAssignment chi_f(2, 1, 2);
  chi_f.set(0, MultiIndex{1, 0}, 1, f);
  chi_f.set(0, MultiIndex{0, 1}, 0, -f);
  MomentumAssignment g = apply_momentum_gauge(m, chi_f);
  Expr d1 = g.at(0, MultiIndex{0, 0}, 0) - m.at(0, MultiIndex{0, 0}, 0);
  Expr d2 = g.at(0, MultiIndex{0, 0}, 1) - m.at(0, MultiIndex{0, 0}, 1);
  EXPECT_EQ(d1, -total_derivative(f, 1));
  EXPECT_EQ(d2, total_derivative(f, 0));
  EXPECT_EQ(cascade_residual(p, g), cascade_residual(p, m));
  EXPECT_EQ(currents(p, g), currents(p, m));
}

TEST(Gauge, InvarianceOnRandomTables) {
  Gen g(4);
  for (int i = 0; i < 15; ++i) {
    auto p = random_problem(g, 2, g.integer(2, 3));
    MomentumAssignment m = canonical_momenta(p);
    MomentumAssignment chi(2, 1, p.k);
    for (int level = 2; level <= p.k; ++level) {
      for (const auto& nu : multi_indices_of_order(2, level)) {
        if (!nu.has(0) || !nu.has(1)) continue;
        Expr v = g.poly(testing_support::jets_up_to(2, 1), 2, 2);
        chi.set(0, nu.lowered(0), 0, v);
        chi.set(0, nu.lowered(1), 1, -v);
      }
    }
    MomentumAssignment gauged = apply_momentum_gauge(m, chi);
    EXPECT_EQ(cascade_residual(p, gauged), cascade_residual(p, m));
    EXPECT_EQ(currents(p, gauged), currents(p, m));
    MomentumAssignment fixed = symmetrize_momenta(gauged);
    EXPECT_EQ(fixed, m);
    EXPECT_EQ(currents(p, fixed), currents(p, m));
  }
}

TEST(Symmetrize, Examples) {
  auto p = problem(2, 2, "u[1,1]*u[2,0] + u[0,2]^2");
  MomentumAssignment m = canonical_momenta(p);
  EXPECT_EQ(symmetrize_momenta(m), m);
  EXPECT_EQ(symmetric_part(m), m);

  MomentumAssignment pure(2, 1, 2);
  pure.set(0, MultiIndex{1, 0}, 1, ex("x1", p));
  pure.set(0, MultiIndex{0, 1}, 0, ex("-x1", p));
  EXPECT_TRUE(symmetric_part(pure).is_zero());

  MomentumAssignment ab(2, 1, 2);
  Expr a(Atom::parameter("a"));
  Expr b(Atom::parameter("b"));
  ab.set(0, MultiIndex{1, 0}, 1, a);
  ab.set(0, MultiIndex{0, 1}, 0, b);
  MomentumAssignment avg = symmetric_part(ab);
  EXPECT_EQ(avg.at(0, MultiIndex{1, 0}, 1), make_rational(1, 2) * (a + b));
  EXPECT_EQ(avg.at(0, MultiIndex{0, 1}, 0), make_rational(1, 2) * (a + b));
}

TEST(Constrained, Examples) {
  LagrangianProblem p = problem(1, 1, "1/2*u[1]^2 - u^2");
  EquationSet plain = cascade_equations(p);
  EXPECT_EQ(constrained_generating_family(p).size(), plain.size());

  p.constraints = {ex("u[1]", p)};
  EquationSet with = constrained_generating_family(p);
  Expr lambda(Atom::multiplier(0));
  EXPECT_EQ(find_rhs(with, "p_u[1]") - find_rhs(plain, "p_u[1]"), lambda);
  EXPECT_EQ(find_rhs(with, "EL u"), find_rhs(plain, "EL u"));

  p.constraints = {ex("u", p)};
  with = constrained_generating_family(p);
  EXPECT_EQ(find_rhs(with, "p_u[1]"), find_rhs(plain, "p_u[1]"));
  EXPECT_EQ(find_rhs(with, "EL u") - find_rhs(plain, "EL u"), lambda);
}

TEST(PsiReduction, Examples) {
  PsiReduction one = psi_reduction({Expr(3)}, {{Expr(5)}});
  EXPECT_EQ(one.trace, Expr(5));
  EXPECT_EQ(one.momenta, std::vector<Expr>{Expr(3)});
  PsiReduction zero = psi_reduction({Expr(), Expr()}, {{Expr(), Expr()}, {Expr(), Expr()}});
  EXPECT_TRUE(zero.trace.is_zero());
  Expr a(Atom::parameter("a")), b(Atom::parameter("b")), c(Atom::parameter("c")), d(Atom::parameter("d"));
  PsiReduction r1 = psi_reduction({a, b}, {{c, Expr(7)}, {Expr(-2), d}});
  PsiReduction r2 = psi_reduction({a, b}, {{c, Expr(Atom::parameter("e"))}, {Expr(9), d}});
  EXPECT_EQ(r1.trace, c + d);
  EXPECT_EQ(r1.trace, r2.trace);
  EXPECT_EQ(r1.momenta, (std::vector<Expr>{a, b}));
}
