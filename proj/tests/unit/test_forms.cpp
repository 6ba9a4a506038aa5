#include <gtest/gtest.h>

#include "jetcalc/forms.hpp"
#include "support.hpp"

using namespace jetcalc;
using testing_support::ex;
using testing_support::Gen;

namespace {

struct Mech {
  LagrangianProblem p = testing_support::mechanics();
  Atom t = Atom::base(0);
  Atom q = Atom::jet(0, MultiIndex{0});
  Atom P = Atom::momentum(0, MultiIndex{0}, 0);
  ExteriorForm dt = ExteriorForm::differential(t);
  ExteriorForm dq = ExteriorForm::differential(q);
  ExteriorForm dp = ExteriorForm::differential(P);
};

}  // namespace

TEST(Wedge, Examples) {
  Mech m;
  EXPECT_TRUE(wedge(m.dt, m.dt).is_zero());
  EXPECT_EQ(wedge(m.dp, m.dq), -wedge(m.dq, m.dp));
  EXPECT_EQ(wedge(m.dp, m.dq).coefficient({m.q, m.P}), Expr(-1));
  Expr q(m.q);
  EXPECT_EQ(wedge(q * m.dq, m.dt), q * wedge(m.dq, m.dt));
  EXPECT_EQ(ExteriorForm::term(Expr(1), {m.P, m.q}), -ExteriorForm::term(Expr(1), {m.q, m.P}));
}

TEST(Wedge, Associativity) {
  Mech m;
  ExteriorForm a = Expr(m.q) * m.dt + m.dp;
  ExteriorForm b = m.dq + Expr(m.P) * m.dt;
  ExteriorForm c = m.dp - m.dq;
  EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
  EXPECT_EQ(wedge(a, b), -wedge(b, a));
}

TEST(ExteriorDerivative, Examples) {
  Mech m;
  Expr H = ex("1/2*m^-1*p_q[0;1]^2 + U(t, q)", m.p);
  ExteriorForm theta = Expr(m.P) * m.dq - H * m.dt;
  ExteriorForm expected = wedge(m.dp, m.dq) - wedge(differential(H), m.dt);
  EXPECT_EQ(exterior_derivative(theta), expected);
  EXPECT_EQ(differential(H).coefficient({m.q}), ex("U_{,2}(t, q)", m.p));
  EXPECT_TRUE(exterior_derivative(m.dq).is_zero());
  EXPECT_EQ(exterior_derivative(ExteriorForm::scalar(ex("q^2", m.p))), ex("2*q", m.p) * m.dq);
}

TEST(ExteriorDerivative, SquaresToZero) {
  Gen g(2);
  std::vector<Atom> coords = {Atom::base(0), Atom::base(1), Atom::jet(0, MultiIndex{0, 0}), Atom::jet(0, MultiIndex{0, 1}),
                              Atom::momentum(0, MultiIndex{0, 0}, 1)};
  for (int i = 0; i < 30; ++i) {
    ExteriorForm a(1);
    for (const auto& c : coords) a += g.poly(coords, 3, 2) * ExteriorForm::differential(c);
    EXPECT_TRUE(exterior_derivative(exterior_derivative(a)).is_zero());
    ExteriorForm b = ExteriorForm::scalar(g.poly(coords, 2, 3));
    EXPECT_EQ(exterior_derivative(wedge(a, b)), wedge(exterior_derivative(a), b) - wedge(a, exterior_derivative(b)));
  }
}

TEST(InteriorProduct, Examples) {
  Mech m;
  EXPECT_EQ(interior_product({{m.P, Expr(1)}}, wedge(m.dp, m.dq)), m.dq);
  EXPECT_EQ(interior_product({{m.q, Expr(1)}}, wedge(m.dp, m.dq)), -m.dp);
  EXPECT_TRUE(interior_product({{m.q, Expr(1)}}, m.dt).is_zero());
  EXPECT_EQ(interior_product({{m.t, Expr(2)}}, m.dt), ExteriorForm::scalar(Expr(2)));
}

TEST(InteriorProduct, AntiDerivationAndNilpotence) {
  Gen g(8);
  Mech m;
  std::vector<Atom> coords = {m.t, m.q, m.P};
  for (int i = 0; i < 30; ++i) {
    ExteriorForm a(1);
    ExteriorForm b(1);
    VectorField X;
    for (const auto& c : coords) {
      a += g.poly(coords, 2, 2) * ExteriorForm::differential(c);
      b += g.poly(coords, 2, 2) * ExteriorForm::differential(c);
      X[c] = g.poly(coords, 1, 2);
    }
    EXPECT_EQ(interior_product(X, wedge(a, b)), wedge(interior_product(X, a), b) - wedge(a, interior_product(X, b)));
    EXPECT_TRUE(interior_product(X, interior_product(X, wedge(a, b))).is_zero());
  }
}

TEST(Pullback, Examples) {
  Mech m;
  SectionData sigma{{m.q, ex("t^2", m.p)}, {m.P, Expr(3)}};
  EXPECT_EQ(pullback_section(m.dq, sigma), ex("2*t", m.p) * m.dt);
  SectionData constant{{m.q, Expr(1)}, {m.P, Expr(2)}};
  EXPECT_TRUE(pullback_section(wedge(m.dp, m.dq), constant).is_zero());
  Symbols s = Symbols::standard(2, {"u"});
  ExteriorForm vol = ExteriorForm::volume(2);
  SectionData any{{Atom::jet(0, MultiIndex{0, 0}), ex("x1*x2", s)}};
  EXPECT_EQ(pullback_section(vol, any), vol);
  EXPECT_EQ(vol, wedge(ExteriorForm::differential(Atom::base(0)), ExteriorForm::differential(Atom::base(1))));
  EXPECT_THROW(pullback_section(m.dp, {{m.q, Expr(1)}}), Error);
}

TEST(Pullback, DerivedMomentumAtomsUseTotalDerivatives) {
  Mech m;
  Atom dP = Atom::momentum(0, MultiIndex{0}, 0, MultiIndex{1});
  SectionData sigma{{m.q, ex("t", m.p)}, {m.P, ex("t^3", m.p)}};
  EXPECT_EQ(pullback_section(ExteriorForm::scalar(Expr(dP)), sigma), ExteriorForm::scalar(ex("3*t^2", m.p)));
}

TEST(Forms, VolumeBlockAndDegreeChecks) {
  Symbols s = Symbols::standard(2, {"u"});
  ExteriorForm du = ExteriorForm::differential(Atom::jet(0, MultiIndex{0, 0}));
  ExteriorForm dx1 = ExteriorForm::differential(Atom::base(0));
  ExteriorForm dx2 = ExteriorForm::differential(Atom::base(1));
  EXPECT_EQ(volume_block(2, 0, du), wedge(du, dx2));
  EXPECT_EQ(volume_block(2, 1, du), wedge(dx1, du));
  EXPECT_THROW(ExteriorForm(1) + ExteriorForm(2), Error);
  EXPECT_EQ(print(wedge(dx1, dx2), s), "(1) d(x1) ^ d(x2)");
}
