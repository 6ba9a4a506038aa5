#include <gtest/gtest.h>

#include "jetcalc/prolongation.hpp"
#include "support.hpp"

using namespace jetcalc;
using testing_support::ex;
using testing_support::Gen;

TEST(Prolongation, Examples) {
  Symbols s = Symbols::standard(1, {"u"});
  VectorField a = prolong_vertical_field(s, {{0, ex("u^2", s)}}, 1);
  EXPECT_EQ(a.at(Atom::jet(0, MultiIndex{0})), ex("u^2", s));
  EXPECT_EQ(a.at(Atom::jet(0, MultiIndex{1})), ex("2*u*u[1]", s));
  VectorField b = prolong_vertical_field(s, {{0, Expr(1)}}, 3);
  EXPECT_EQ(b.size(), 1u);
  EXPECT_EQ(b.at(Atom::jet(0, MultiIndex{0})), Expr(1));
  VectorField c = prolong_vertical_field(s, {{0, ex("u[1]", s)}}, 2);
  EXPECT_EQ(c.at(Atom::jet(0, MultiIndex{0})), ex("u[1]", s));
  EXPECT_EQ(c.at(Atom::jet(0, MultiIndex{1})), ex("u[2]", s));
  EXPECT_EQ(c.at(Atom::jet(0, MultiIndex{2})), ex("u[3]", s));
  EXPECT_THROW(prolong_vertical_field(s, {{0, ex("p_u[0;1]", s)}}, 1), Error);
}

TEST(Prolongation, FirstOrderLiftFormula) {
  Gen g(6);
  for (int i = 0; i < 20; ++i) {
    std::size_t n = static_cast<std::size_t>(g.integer(1, 2));
    Symbols s = Symbols::standard(n, {"u"});
    Atom u = Atom::jet(0, MultiIndex(n));
    Expr psi = g.poly(testing_support::jets_up_to(n, 0), 3, 4);
    VectorField lift = prolong_vertical_field(s, {{0, psi}}, 1);
    for (std::size_t mu = 0; mu < n; ++mu) {
      Expr expected = partial_derivative(psi, Atom::base(static_cast<int>(mu))) +
                      Expr(Atom::jet(0, MultiIndex::unit(n, mu))) * partial_derivative(psi, u);
      auto it = lift.find(Atom::jet(0, MultiIndex::unit(n, mu)));
      EXPECT_EQ(it == lift.end() ? Expr() : it->second, expected);
    }
  }
}

TEST(Prolongation, ContactPreservation) {
  Gen g(14);
  for (int i = 0; i < 20; ++i) {
    std::size_t n = static_cast<std::size_t>(g.integer(1, 2));
    int order = g.integer(1, 3);
    Symbols s = Symbols::standard(n, {"u"});
    Expr psi = g.poly(testing_support::jets_up_to(n, 1), 2, 3);
    VectorField lift = prolong_vertical_field(s, {{0, psi}}, order);
    Expr section;
    std::vector<Atom> base;
    for (std::size_t d = 0; d < n; ++d) base.push_back(Atom::base(static_cast<int>(d)));
    section = g.poly(base, 3, 4);
    Expr along = evaluate_on_jet(psi, {{0, section}});
    for (const auto& mu : multi_indices_up_to(n, order)) {
      auto it = lift.find(Atom::jet(0, mu));
      Expr component = it == lift.end() ? Expr() : evaluate_on_jet(it->second, {{0, section}});
      EXPECT_EQ(component, total_derivative(along, mu));
    }
  }
}

TEST(HomogeneousPoly, ConversionAndErrors) {
  Symbols s = Symbols::standard(2, {"u"});
  s.params = {"a"};
  HomogeneousPoly q = HomogeneousPoly::from_expr(ex("a*x1^2 + 3*x1*x2", s), 2);
  EXPECT_EQ(q.degree, 2);
  EXPECT_EQ(q.coeffs.at(MultiIndex{2, 0}), ex("a", s));
  EXPECT_EQ(q.to_expr(), ex("a*x1^2 + 3*x1*x2", s));
  EXPECT_THROW(HomogeneousPoly::from_expr(ex("x1^2 + x2", s), 2), Error);
  EXPECT_THROW(HomogeneousPoly::from_expr(ex("x1^-1", s), 2), Error);
}

TEST(Polarization, QuadraticFormGram) {
  Symbols s = Symbols::standard(2, {"u"});
  s.params = {"alpha", "beta", "gamma"};
  HomogeneousPoly q = HomogeneousPoly::from_expr(ex("alpha*x1^2 + beta*x1*x2 + gamma*x2^2", s), 2);
  auto B = gram_matrix(q);
  EXPECT_EQ(2 * B[0][0], ex("2*alpha", s));
  EXPECT_EQ(2 * B[0][1], ex("beta", s));
  EXPECT_EQ(2 * B[1][0], ex("beta", s));
  EXPECT_EQ(2 * B[1][1], ex("2*gamma", s));
  EXPECT_THROW(gram_matrix(HomogeneousPoly::from_expr(ex("x1^3", s), 2)), Error);
}

TEST(Polarization, MonomialAndEulerIdentity) {
  Symbols s = Symbols::standard(3, {"u"});
  for (int d = 1; d <= 5; ++d) {
    auto P = polarize(HomogeneousPoly::from_expr(ex("x1", s).pow(d), 3));
    EXPECT_EQ(P[0].to_expr(), ex("x1", s).pow(d - 1));
    EXPECT_TRUE(P[1].coeffs.empty());
    EXPECT_TRUE(P[2].coeffs.empty());
  }
  Gen g(10);
  for (int i = 0; i < 20; ++i) {
    std::size_t vars = static_cast<std::size_t>(g.integer(1, 3));
    int degree = g.integer(1, 4);
    Expr e;
    for (const auto& mu : multi_indices_of_order(vars, degree)) {
      Expr m(g.integer(-3, 3));
      for (std::size_t v = 0; v < vars; ++v) m = m * Expr(Atom::base(static_cast<int>(v))).pow(mu[v]);
      e += m;
    }
    if (e.is_zero()) continue;
    HomogeneousPoly q = HomogeneousPoly::from_expr(e, vars);
    auto P = polarize(q);
    Expr contracted;
    for (std::size_t v = 0; v < vars; ++v) {
      EXPECT_EQ(Rational(degree) * P[v].to_expr(), partial_derivative(e, Atom::base(static_cast<int>(v))));
      contracted += Expr(Atom::base(static_cast<int>(v))) * P[v].to_expr();
    }
    EXPECT_EQ(contracted, e);
    EXPECT_EQ(resymmetrize(P, degree), q);
  }
}
