#include <gtest/gtest.h>

#include "jetcalc/calculus.hpp"
#include "support.hpp"

using namespace jetcalc;
using testing_support::ex;
using testing_support::Gen;

TEST(PartialDerivative, Examples) {
  LagrangianProblem p = testing_support::mechanics();
  EXPECT_EQ(partial_derivative(ex("m/2*q[1]^2", p), Atom::jet(0, MultiIndex{1})), ex("m*q[1]", p));
  EXPECT_EQ(partial_derivative(ex("U(t, q)", p), Atom::jet(0, MultiIndex{0})), ex("U_{,2}(t, q)", p));
  Symbols s = Symbols::standard(1, {"u"});
  EXPECT_EQ(partial_derivative(ex("1/2*u[2]^2 + u[1]", s), Atom::jet(0, MultiIndex{2})), ex("u[2]", s));
}

TEST(PartialDerivative, ChainRuleThroughNestedArguments) {
  LagrangianProblem p = testing_support::mechanics();
  Expr e = ex("U(t, q^2)", p);
  EXPECT_EQ(partial_derivative(e, Atom::jet(0, MultiIndex{0})), ex("2*q*U_{,2}(t, q^2)", p));
  EXPECT_EQ(partial_derivative(e, Atom::jet(0, MultiIndex{1})), Expr());
}

TEST(PartialDerivative, NegativePowers) {
  LagrangianProblem p = testing_support::mechanics();
  EXPECT_EQ(partial_derivative(ex("m^-1*q^2", p), Atom::parameter("m")), ex("-m^-2*q^2", p));
}

TEST(TotalDerivative, Examples) {
  Symbols s = Symbols::standard(1, {"u"});
  EXPECT_EQ(total_derivative(ex("u*u[1]", s), 0), ex("u[1]^2 + u*u[2]", s));
  EXPECT_TRUE(total_derivative(ex("7/3", s), 0).is_zero());
  s.opaque["F"] = 2;
  EXPECT_EQ(total_derivative(ex("F(x1, u)", s), 0), ex("F_{,1}(x1, u) + u[1]*F_{,2}(x1, u)", s));
}

TEST(TotalDerivative, MomentaAndMultipliers) {
  Symbols s = Symbols::standard(2, {"u"});
  EXPECT_EQ(total_derivative(ex("p_u[1,0;2]", s), 1), ex("p_u[1,0;2|0,1]", s));
  EXPECT_TRUE(total_derivative(ex("lambda[1]", s), 0).is_zero());
  EXPECT_EQ(total_derivative(ex("x1*x2", s), MultiIndex{1, 1}), Expr(1));
}

TEST(TotalDerivative, CommutesAndMatchesPartialCommutator) {
  Gen g(3);
  auto atoms = testing_support::jets_up_to(2, 2);
  for (int i = 0; i < 40; ++i) {
    Expr L = g.poly(atoms, 3, 4);
    EXPECT_EQ(total_derivative(total_derivative(L, 0), 1), total_derivative(total_derivative(L, 1), 0));
    for (const auto& sigma : multi_indices_up_to(2, 3)) {
      for (std::size_t lam = 0; lam < 2; ++lam) {
        Atom c = Atom::jet(0, sigma);
        Expr lhs = partial_derivative(total_derivative(L, static_cast<int>(lam)), c) -
                   total_derivative(partial_derivative(L, c), static_cast<int>(lam));
        Expr rhs = sigma.has(lam) ? partial_derivative(L, Atom::jet(0, sigma.lowered(lam))) : Expr();
        EXPECT_EQ(lhs, rhs);
      }
    }
  }
}

TEST(TotalDerivative, OrderCap) {
  Symbols s = Symbols::standard(1, {"u"});
  int saved = order_cap();
  set_order_cap(3);
  EXPECT_NO_THROW(total_derivative(ex("u[2]", s), 0));
  EXPECT_THROW(total_derivative(ex("u[3]", s), 0), Error);
  set_order_cap(saved);
}

TEST(Substitute, ReplacesInsideFunctionArguments) {
  LagrangianProblem p = testing_support::mechanics();
  Expr e = ex("U(t, q) + q^2", p);
  Expr out = substitute(e, std::map<Atom, Expr>{{Atom::jet(0, MultiIndex{0}), ex("t^2", p)}});
  EXPECT_EQ(out, ex("U(t, t^2) + t^4", p));
  EXPECT_EQ(max_jet_order(ex("q*q[1]^2", p)), 1);
  EXPECT_EQ(max_jet_order(ex("t", p)), -1);
  EXPECT_EQ(all_atoms_of(ex("U(t, q[1])", p)).size(), 3u);
  EXPECT_EQ(atoms_of(ex("U(t, q[1])", p)).size(), 1u);
}

TEST(Derive, LeibnizRule) {
  Symbols s = Symbols::standard(1, {"u"});
  Expr e = ex("u^3*x1", s);
  Expr out = derive(e, [](const Atom& a) { return a.kind() == AtomKind::Jet ? Expr(1) : Expr(); });
  EXPECT_EQ(out, ex("3*u^2*x1", s));
}
