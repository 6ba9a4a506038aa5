#include "jetcalc/legendre.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "jetcalc/calculus.hpp"
#include "jetcalc/printer.hpp"

namespace jetcalc {

namespace {

class Laplace {
 public:
  explicit Laplace(const std::vector<std::vector<Expr>>& a) : a_(a) {}

  Expr det(std::size_t row, std::uint32_t columns) {
    if (row == a_.size()) return Expr(1);
    if (auto it = memo_.find(columns); it != memo_.end()) return it->second;
    Expr out;
    int sign = 1;
    for (std::size_t c = 0; c < a_.size(); ++c) {
      if (!(columns & (1u << c))) continue;
      if (!a_[row][c].is_zero()) {
        Expr minor = det(row + 1, columns & ~(1u << c));
        Expr term = a_[row][c] * minor;
        out += sign > 0 ? term : -term;
      }
      sign = -sign;
    }
    memo_.emplace(columns, out);
    return out;
  }

 private:
  const std::vector<std::vector<Expr>>& a_;
  std::unordered_map<std::uint32_t, Expr> memo_;
};

std::vector<Atom> top_jets(const LagrangianProblem& p) {
  std::vector<Atom> out;
  for (int f = 0; f < static_cast<int>(p.fields.size()); ++f) {
    for (const auto& nu : multi_indices_of_order(p.n, p.k)) out.push_back(Atom::jet(f, nu));
  }
  return out;
}

std::vector<Atom> top_momenta(const LagrangianProblem& p) {
  std::vector<Atom> out;
  for (const auto& x : top_jets(p)) out.push_back(Atom::symmetric_momentum(x.field(), x.multi_index()));
  return out;
}

Expr slot_form(const LagrangianProblem& p, const Expr& e) {
  MomentumAssignment symbolic(p.n, p.fields.size(), p.k);
  for (const auto& [key, _] : symbolic.slots()) symbolic.set(key, Expr(Atom::momentum(key.field, key.mu, key.last)));
  return substitute(e, [&](const Atom& a) -> std::optional<Expr> {
    if (!a.is_symmetric_momentum()) return std::nullopt;
    return total_derivative(symbolic.symmetrized(a.field(), a.multi_index()), a.derivative());
  });
}

}  // namespace

Expr determinant(const std::vector<std::vector<Expr>>& a) {
  if (a.empty()) return Expr(1);
  if (a.size() > 24) throw Error("matrix too large for exact determinant");
  for (const auto& row : a) {
    if (row.size() != a.size()) throw Error("determinant of a non-square matrix");
  }
  Laplace l(a);
  return l.det(0, (1u << a.size()) - 1);
}

Exchange legendre_exchange(const Expr& f, const std::vector<Atom>& xs, const std::vector<Atom>& ys) {
  if (xs.size() != ys.size()) throw Error("exchange needs one conjugate per variable");
  std::size_t N = xs.size();
  auto involves_x = [&](const Expr& e) {
    return depends_on(e, [&](const Atom& a) { return std::find(xs.begin(), xs.end(), a) != xs.end(); });
  };
  std::vector<Expr> grad(N);
  std::vector<std::vector<Expr>> hess(N, std::vector<Expr>(N));
  std::map<Atom, Expr> at_zero;
  for (const auto& x : xs) at_zero[x] = Expr();
  std::vector<Expr> offset(N);
  for (std::size_t a = 0; a < N; ++a) {
    grad[a] = partial_derivative(f, xs[a]);
    for (std::size_t b = 0; b < N; ++b) {
      hess[a][b] = partial_derivative(grad[a], xs[b]);
      if (involves_x(hess[a][b])) throw Error("Lagrangian is not quadratic in the exchanged variables");
    }
    offset[a] = substitute(grad[a], at_zero);
  }
  Expr det = determinant(hess);
  if (det.is_zero()) throw Error("singular Legendre transform: the Hessian is degenerate");
  if (!det.is_monomial()) {
    throw Error("Hessian determinant " + print(det, Symbols{}) + " is not a monomial; exact inversion unsupported");
  }
  Expr inv_det = det.inverse();
  std::vector<Expr> rhs(N);
  for (std::size_t a = 0; a < N; ++a) rhs[a] = Expr(ys[a]) - offset[a];
  Exchange out;
  for (std::size_t a = 0; a < N; ++a) {
    auto cramer = hess;
    for (std::size_t r = 0; r < N; ++r) cramer[r][a] = rhs[r];
    out.inversion[xs[a]] = determinant(cramer) * inv_det;
  }
  Expr g = -f;
  for (std::size_t a = 0; a < N; ++a) g += Expr(ys[a]) * Expr(xs[a]);
  out.transform = substitute(g, out.inversion);
  return out;
}

LegendreData legendre_top(const LagrangianProblem& p) {
  if (!p.constraints.empty()) throw Error("Legendre transform of a constrained problem is not supported");
  Exchange ex = legendre_exchange(p.lagrangian, top_jets(p), top_momenta(p));
  LegendreData out;
  out.h = ex.transform;
  out.inversion = std::move(ex.inversion);
  out.H = out.h;
  for (int f = 0; f < static_cast<int>(p.fields.size()); ++f) {
    for (const auto& nu : multi_indices_up_to(p.n, p.k - 1)) {
      if (nu.is_zero()) continue;
      out.H += Expr(Atom::symmetric_momentum(f, nu)) * Expr(Atom::jet(f, nu));
    }
  }
  out.H_slots = slot_form(p, out.H);
  return out;
}

EquationSet hamilton_equations(const LagrangianProblem& p) {
  LegendreData data = legendre_top(p);
  EquationSet out;
  for (int f = 0; f < static_cast<int>(p.fields.size()); ++f) {
    for (const auto& nu : multi_indices_of_order(p.n, p.k)) {
      Atom x = Atom::jet(f, nu);
      out.push_back({print(x, p), Expr(x), partial_derivative(data.h, Atom::symmetric_momentum(f, nu))});
    }
    for (int level = p.k - 1; level >= 0; --level) {
      for (const auto& nu : multi_indices_of_order(p.n, level)) {
        Expr rhs = -partial_derivative(data.h, Atom::jet(f, nu));
        for (std::size_t lam = 0; lam < p.n; ++lam) {
          rhs -= total_derivative(Expr(Atom::momentum(f, nu, static_cast<int>(lam))), static_cast<int>(lam));
        }
        if (level == 0) {
          out.push_back({"EL " + p.fields[f], Expr(), rhs});
        } else {
          Atom lhs = Atom::symmetric_momentum(f, nu);
          out.push_back({print(lhs, p), Expr(lhs), rhs});
        }
      }
    }
  }
  return out;
}

FieldHamiltonian field_hamiltonian_first_order(const LagrangianProblem& p) {
  if (p.k != 1) throw Error("the first-order field Hamiltonian needs k = 1");
  LegendreData data = legendre_top(p);
  FieldHamiltonian out;
  out.H = data.H_slots;
  MultiIndex zero(p.n);
  for (int f = 0; f < static_cast<int>(p.fields.size()); ++f) {
    Expr divergence;
    for (std::size_t mu = 0; mu < p.n; ++mu) {
      Atom slot = Atom::momentum(f, zero, static_cast<int>(mu));
      Atom x = Atom::jet(f, p.unit(static_cast<int>(mu)));
      out.equations.push_back({print(x, p), Expr(x), partial_derivative(out.H, slot)});
      divergence += total_derivative(Expr(slot), static_cast<int>(mu));
    }
    out.equations.push_back({"divergence " + p.fields[f], divergence, -partial_derivative(out.H, Atom::jet(f, zero))});
  }
  return out;
}

Expr energy_legendre(const LagrangianProblem& p, int time_direction) {
  if (p.k != 1) throw Error("the energy transform needs k = 1");
  if (time_direction < 0 || static_cast<std::size_t>(time_direction) >= p.n) throw Error("time direction out of range");
  std::vector<Atom> xs;
  std::vector<Atom> ys;
  for (int f = 0; f < static_cast<int>(p.fields.size()); ++f) {
    xs.push_back(Atom::jet(f, p.unit(time_direction)));
    ys.push_back(Atom::momentum(f, p.zero(), time_direction));
  }
  return legendre_exchange(p.lagrangian, xs, ys).transform;
}

}  // namespace jetcalc
