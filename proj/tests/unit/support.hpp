#pragma once

#include <algorithm>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "jetcalc/calculus.hpp"
#include "jetcalc/parser.hpp"
#include "jetcalc/printer.hpp"
#include "jetcalc/problem.hpp"

namespace jetcalc {

inline void PrintTo(const Expr& e, std::ostream* os) { *os << print(e, Symbols::standard(2, {"u", "v"})); }

}  // namespace jetcalc

namespace testing_support {

using namespace jetcalc;

inline LagrangianProblem problem(std::size_t n, int k, const std::string& lagrangian, std::vector<std::string> fields = {"u"}) {
  LagrangianProblem p;
  static_cast<Symbols&>(p) = Symbols::standard(n, std::move(fields));
  p.k = k;
  p.lagrangian = parse_expr(lagrangian, p);
  return p;
}

inline LagrangianProblem mechanics() {
  return parse_problem("base 1 (t); field q; param m; opaque U(2); order 1; lagrangian m/2*q[1]^2 - U(t, q);").problem;
}

inline Expr ex(const std::string& text, const Symbols& s) { return parse_expr(text, s); }

/// Classical Euler-Lagrange expression summed over ordered index lists
/// (i_1, ..., i_l), each multi-index counted once per arrangement.
inline Expr index_list_euler_lagrange(const LagrangianProblem& p, int field) {
  Expr out;
  std::vector<int> list;
  auto visit = [&](auto&& self, int depth) -> void {
    MultiIndex mu(p.n);
    for (int i : list) mu = mu.raised(static_cast<std::size_t>(i));
    Expr term = partial_derivative(p.lagrangian, Atom::jet(field, mu));
    for (int i : list) term = total_derivative(term, i);
    long long arrangements = 1;
    {
      std::vector<int> sorted = list;
      std::sort(sorted.begin(), sorted.end());
      long long count = 0;
      do ++count; while (std::next_permutation(sorted.begin(), sorted.end()));
      arrangements = count;
    }
    Expr piece = make_rational(depth % 2 == 0 ? 1 : -1, arrangements) * term;
    out += piece;
    if (depth == p.k) return;
    for (int i = 0; i < static_cast<int>(p.n); ++i) {
      list.push_back(i);
      self(self, depth + 1);
      list.pop_back();
    }
  };
  visit(visit, 0);
  return out;
}

/// Small random polynomial generator independent of the library's.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Expr poly(const std::vector<Atom>& atoms, int degree, int terms) {
    Expr out;
    for (int t = 0; t < terms; ++t) {
      Expr m(integer(-3, 3));
      int d = integer(0, degree);
      for (int i = 0; i < d; ++i) m = m * Expr(atoms[static_cast<std::size_t>(integer(0, static_cast<int>(atoms.size()) - 1))]);
      out += m;
    }
    return out;
  }

 private:
  std::mt19937 rng_;
};

inline std::vector<Atom> jets_up_to(std::size_t n, int order, bool with_base = true) {
  std::vector<Atom> out;
  for (const auto& mu : multi_indices_up_to(n, order)) out.push_back(Atom::jet(0, mu));
  if (with_base) {
    for (std::size_t i = 0; i < n; ++i) out.push_back(Atom::base(static_cast<int>(i)));
  }
  return out;
}

}  // namespace testing_support
