#include <gtest/gtest.h>

#include "jetcalc/parser.hpp"
#include "jetcalc/printer.hpp"
#include "support.hpp"

using namespace jetcalc;
using testing_support::ex;
using testing_support::Gen;

TEST(Parser, MechanicsAtoms) {
  LagrangianProblem p = parse_problem("base 1 (x1); field q; param m; opaque U(2);").problem;
  Expr e = parse_expr("m/2 * q[1]^2 - U(x1, q)", p);
  auto atoms = atoms_of(e);
  EXPECT_EQ(atoms.size(), 3u);
  EXPECT_TRUE(atoms.contains(Atom::parameter("m")));
  EXPECT_TRUE(atoms.contains(Atom::jet(0, MultiIndex{1})));
  Expr m(Atom::parameter("m"));
  Expr q1(Atom::jet(0, MultiIndex{1}));
  Expr U(Atom::function("U", {}, {Expr(Atom::base(0)), Expr(Atom::jet(0, MultiIndex{0}))}));
  EXPECT_EQ(e, make_rational(1, 2) * m * q1 * q1 - U);
}

TEST(Parser, TwoDimensionalJets) {
  Symbols s = Symbols::standard(2, {"u"});
  EXPECT_EQ(parse_expr("u[2,0] + u[0,2]", s), Expr(Atom::jet(0, MultiIndex{2, 0})) + Expr(Atom::jet(0, MultiIndex{0, 2})));
  EXPECT_EQ(parse_expr("u[0]", s), Expr(Atom::jet(0, MultiIndex{0, 0})));
  EXPECT_EQ(parse_expr("u", s), Expr(Atom::jet(0, MultiIndex{0, 0})));
}

TEST(Parser, JetOrderAboveK) {
  try {
    parse_problem("base 1; field u; order 2;\nlagrangian u[3];");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_NE(std::string(e.what()).find("jet order exceeds k"), std::string::npos);
  }
  EXPECT_THROW(parse_problem("base 1; field u; lagrangian u[3]; order 2;"), ParseError);
}

TEST(Parser, InfersOrder) {
  EXPECT_EQ(parse_problem("field u; lagrangian u[3]^2;").problem.k, 3);
  EXPECT_EQ(parse_problem("field u; lagrangian u^2;").problem.k, 1);
}

TEST(Parser, ErrorsCarryLineAndColumn) {
  try {
    parse_problem("base 1;\nfield u;\nlagrangian u[1] + * 2;");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_GT(e.column(), 1);
    EXPECT_EQ(std::string(e.what()).substr(0, 2), "3:");
  }
  EXPECT_THROW(parse_problem("field u; lagrangian v;"), ParseError);
  EXPECT_THROW(parse_problem("field u; lagrangian u[1,1];"), ParseError);
  EXPECT_THROW(parse_problem("field u; frobnicate;"), ParseError);
  EXPECT_THROW(parse_problem("field u; opaque U(2); lagrangian U(u);"), ParseError);
  EXPECT_THROW(parse_problem("field u; lagrangian 1/0;"), ParseError);
}

TEST(Parser, NumbersAndPowers) {
  Symbols s = Symbols::standard(1, {"u"});
  EXPECT_EQ(parse_expr("0.25*u", s), make_rational(1, 4) * Expr(Atom::jet(0, MultiIndex{0})));
  EXPECT_EQ(parse_expr("u^-2*u^(2)", s), Expr(1));
  EXPECT_EQ(parse_expr("(u + 1)^2", s), parse_expr("u^2 + 2*u + 1", s));
  EXPECT_EQ(parse_expr("-u - -u", s), Expr());
}

TEST(Parser, MomentaMultipliersAndMarkers) {
  Symbols s = Symbols::standard(2, {"u"});
  s.opaque["F"] = 2;
  EXPECT_EQ(parse_atom("p_u[1,0;2]", s), Atom::momentum(0, MultiIndex{1, 0}, 1));
  EXPECT_EQ(parse_atom("p_u[0;1|1,1]", s), Atom::momentum(0, MultiIndex{0, 0}, 0, MultiIndex{1, 1}));
  EXPECT_EQ(parse_atom("p_u[2,0]", s), Atom::symmetric_momentum(0, MultiIndex{2, 0}));
  EXPECT_EQ(parse_atom("lambda[2]", s), Atom::multiplier(1));
  Atom f = parse_atom("F_{,21}(x1, u)", s);
  EXPECT_EQ(f.call().derivs, (std::vector<int>{0, 1}));
}

TEST(ProblemFile, Blocks) {
  ProblemFile f = parse_problem(R"(
    # comment
    base 2 (t, x);
    field u;
    order 1;
    lagrangian 1/2*u[1,0]^2 - 1/2*u[0,1]^2;
    constraint u[1,0] - u;
    section { u = t*x; u[1,0] = x; }
    divergence { u^2; 0; }
    vertical { u = u^2; }
    polynomial t^2 + t*x;
  )");
  EXPECT_TRUE(f.has_lagrangian);
  EXPECT_EQ(f.problem.base_names, (std::vector<std::string>{"t", "x"}));
  EXPECT_EQ(f.problem.constraints.size(), 1u);
  EXPECT_EQ(f.section.size(), 2u);
  EXPECT_EQ(f.divergence.size(), 2u);
  EXPECT_EQ(f.vertical.size(), 1u);
  ASSERT_TRUE(f.polynomial.has_value());
  EXPECT_THROW(parse_problem("base 2; field u; divergence { u; }"), ParseError);
  EXPECT_THROW(parse_problem("base 1; field u; section { u = u[1]; }"), ParseError);
}

TEST(ProblemFile, LoadFromDisk) {
  ProblemFile f = load_problem(std::string(JETCALC_TEST_DATA) + "/beam.lag");
  EXPECT_EQ(f.problem.k, 2);
  EXPECT_EQ(print(f.problem.lagrangian, f.problem), "1/2*u[2]^2");
  EXPECT_THROW(load_problem("/nonexistent/file.lag"), Error);
}

TEST(Printer, Forms) {
  LagrangianProblem p = testing_support::mechanics();
  EXPECT_EQ(print(Expr(), p), "0");
  EXPECT_EQ(print(ex("m/2*q[1]^2 - U(t, q)", p), p), "-U(t, q) + 1/2*m*q[1]^2");
  EXPECT_EQ(print(Atom::momentum(0, MultiIndex{0}, 0), p), "p_q[0;1]");
  EXPECT_EQ(print_multi_index(MultiIndex{2, 1}), "2,1");
  EXPECT_EQ(print_multi_index(MultiIndex{0, 0}), "0");
  EXPECT_EQ(print_latex(ex("m/2*q[1]^2", p), p).find("\\frac{1}{2}"), 0u);
}

TEST(Printer, ParsePrintRoundTrip) {
  Gen g(17);
  for (std::size_t n = 1; n <= 2; ++n) {
    Symbols s = Symbols::standard(n, {"u", "v"});
    s.params = {"m"};
    s.opaque["G"] = 1;
    auto atoms = testing_support::jets_up_to(n, 2);
    atoms.push_back(Atom::jet(1, MultiIndex(n)));
    atoms.push_back(Atom::parameter("m"));
    atoms.push_back(Atom::momentum(1, MultiIndex::unit(n, 0), 0, MultiIndex::unit(n, n - 1)));
    atoms.push_back(Atom::symmetric_momentum(0, MultiIndex::unit(n, 0)));
    atoms.push_back(Atom::multiplier(0));
    for (int i = 0; i < 50; ++i) {
      Expr e = g.poly(atoms, 3, 4);
      e += make_rational(g.integer(1, 5), 3) * Expr(Atom::function("G", {0}, {g.poly(atoms, 2, 2)}));
      e = e * Expr(Atom::parameter("m")).pow(-1);
      std::string text = print(e, s);
      Expr back = parse_expr(text, s);
      EXPECT_EQ(back, e) << text;
      EXPECT_EQ(print(back, s), text);
    }
  }
}
