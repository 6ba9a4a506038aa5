#include "jetcalc/variational.hpp"

#include "jetcalc/calculus.hpp"
#include "jetcalc/printer.hpp"

namespace jetcalc {

namespace {

void check_grid(const MomentumAssignment& a, const MomentumAssignment& b) {
  if (a.n() != b.n() || a.fields() != b.fields() || a.k() != b.k()) throw Error("momentum grids do not match");
}

Expr divergence_of_slots(const MomentumAssignment& m, int field, const MultiIndex& mu) {
  Expr out;
  for (std::size_t lam = 0; lam < m.n(); ++lam) {
    out += total_derivative(m.at(field, mu, static_cast<int>(lam)), static_cast<int>(lam));
  }
  return out;
}

Expr symbolic_divergence(std::size_t n, int field, const MultiIndex& mu) {
  Expr out;
  for (std::size_t lam = 0; lam < n; ++lam) {
    out += total_derivative(Expr(Atom::momentum(field, mu, static_cast<int>(lam))), static_cast<int>(lam));
  }
  return out;
}

}  // namespace

MomentumAssignment::MomentumAssignment(std::size_t n, std::size_t fields, int k) : n_(n), fields_(fields), k_(k) {
  for (std::size_t f = 0; f < fields; ++f) {
    for (const auto& mu : multi_indices_up_to(n, k - 1)) {
      for (std::size_t lam = 0; lam < n; ++lam) slots_.emplace(SlotKey{static_cast<int>(f), mu, static_cast<int>(lam)}, Expr());
    }
  }
}

const Expr& MomentumAssignment::at(const SlotKey& key) const {
  auto it = slots_.find(key);
  if (it == slots_.end()) throw Error("momentum slot outside the grid");
  return it->second;
}

const Expr& MomentumAssignment::at(int field, const MultiIndex& mu, int last) const {
  return at(SlotKey{field, mu, last});
}

void MomentumAssignment::set(const SlotKey& key, Expr value) {
  auto it = slots_.find(key);
  if (it == slots_.end()) throw Error("momentum slot outside the grid");
  it->second = std::move(value);
}

void MomentumAssignment::set(int field, const MultiIndex& mu, int last, Expr value) {
  set(SlotKey{field, mu, last}, std::move(value));
}

void MomentumAssignment::add(const SlotKey& key, const Expr& value) {
  auto it = slots_.find(key);
  if (it == slots_.end()) throw Error("momentum slot outside the grid");
  it->second += value;
}

Expr MomentumAssignment::symmetrized(int field, const MultiIndex& nu) const {
  if (nu.order() < 1 || nu.order() > k_) throw Error("symmetrization defined for 1 <= |nu| <= k");
  Expr out;
  for (std::size_t lam = 0; lam < n_; ++lam) {
    if (nu.has(lam)) out += at(field, nu.lowered(lam), static_cast<int>(lam));
  }
  return out;
}

Expr MomentumAssignment::top(int field, const MultiIndex& nu) const {
  if (nu.order() != k_) throw Error("top momenta have |nu| = k");
  return symmetrized(field, nu);
}

MomentumAssignment MomentumAssignment::extended(int new_k) const {
  if (new_k < k_) throw Error("cannot shrink a momentum grid");
  MomentumAssignment out(n_, fields_, new_k);
  for (const auto& [key, v] : slots_) out.set(key, v);
  return out;
}

bool MomentumAssignment::is_zero() const {
  for (const auto& [_, v] : slots_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

Rational symmetric_slot_weight(const MultiIndex& mu, int last) {
  return make_rational(mu[static_cast<std::size_t>(last)] + 1, mu.order() + 1);
}

bool all_residuals_zero(const EquationSet& eqs) {
  for (const auto& e : eqs) {
    if (!e.residual().is_zero()) return false;
  }
  return true;
}

Expr substitute_momenta(const Expr& e, const MomentumAssignment& m) {
  return substitute(e, [&](const Atom& a) -> std::optional<Expr> {
    if (a.kind() != AtomKind::Momentum) return std::nullopt;
    Expr base = a.last_index() >= 0 ? m.at(a.field(), a.multi_index(), a.last_index())
                                    : m.symmetrized(a.field(), a.multi_index());
    return total_derivative(base, a.derivative());
  });
}

Expr lagrangian_gradient(const LagrangianProblem& p, int field, const MultiIndex& mu) {
  return partial_derivative(p.lagrangian, Atom::jet(field, mu));
}

MomentumAssignment canonical_momenta(const LagrangianProblem& p) {
  if (!p.constraints.empty()) throw Error("constrained problems use the constrained generating family");
  MomentumAssignment m(p.n, p.fields.size(), p.k);
  for (int f = 0; f < static_cast<int>(p.fields.size()); ++f) {
    for (int level = p.k; level >= 1; --level) {
      for (const auto& nu : multi_indices_of_order(p.n, level)) {
        Expr s = lagrangian_gradient(p, f, nu);
        if (level < p.k) s -= divergence_of_slots(m, f, nu);
        for (std::size_t lam = 0; lam < p.n; ++lam) {
          if (!nu.has(lam)) continue;
          MultiIndex mu = nu.lowered(lam);
          m.set(f, mu, static_cast<int>(lam), symmetric_slot_weight(mu, static_cast<int>(lam)) * s);
        }
      }
    }
  }
  return m;
}

CurrentTable currents(const LagrangianProblem& p, const MomentumAssignment& m) {
  if (m.n() != p.n || m.k() != p.k || m.fields() != p.fields.size()) throw Error("momentum grid does not match the problem");
  CurrentTable out;
  for (int f = 0; f < static_cast<int>(p.fields.size()); ++f) {
    out[{f, MultiIndex(p.n)}] = divergence_of_slots(m, f, MultiIndex(p.n));
    for (int level = 1; level <= p.k; ++level) {
      for (const auto& nu : multi_indices_of_order(p.n, level)) {
        Expr j = m.symmetrized(f, nu);
        if (level < p.k) j += divergence_of_slots(m, f, nu);
        out[{f, nu}] = j;
      }
    }
  }
  return out;
}

EquationSet cascade_equations(const LagrangianProblem& p) {
  if (!p.constraints.empty()) throw Error("constrained problems use the constrained generating family");
  EquationSet out;
  for (int f = 0; f < static_cast<int>(p.fields.size()); ++f) {
    for (int level = p.k; level >= 1; --level) {
      for (const auto& nu : multi_indices_of_order(p.n, level)) {
        Atom lhs = Atom::symmetric_momentum(f, nu);
        Expr rhs = lagrangian_gradient(p, f, nu);
        if (level < p.k) rhs -= symbolic_divergence(p.n, f, nu);
        out.push_back({print(lhs, p), Expr(lhs), rhs});
      }
    }
    MultiIndex zero(p.n);
    out.push_back({"EL " + p.fields[f], Expr(), lagrangian_gradient(p, f, zero) - symbolic_divergence(p.n, f, zero)});
  }
  return out;
}

std::vector<Expr> euler_lagrange(const LagrangianProblem& p) {
  std::vector<Expr> out;
  for (int f = 0; f < static_cast<int>(p.fields.size()); ++f) {
    Expr e;
    for (const auto& mu : multi_indices_up_to(p.n, p.k)) {
      Expr g = lagrangian_gradient(p, f, mu);
      if (g.is_zero()) continue;
      Expr term = total_derivative(g, mu);
      e += mu.order() % 2 == 0 ? term : -term;
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Expr> cascade_residual(const LagrangianProblem& p, const MomentumAssignment& m) {
  std::vector<Expr> out;
  MultiIndex zero(p.n);
  for (int f = 0; f < static_cast<int>(p.fields.size()); ++f) {
    out.push_back(lagrangian_gradient(p, f, zero) - divergence_of_slots(m, f, zero));
  }
  return out;
}

EquationSet holonomy_residual(const LagrangianProblem& p, const SectionData& sigma) {
  EquationSet out;
  for (int f = 0; f < static_cast<int>(p.fields.size()); ++f) {
    for (const auto& mu : multi_indices_up_to(p.n, p.k - 1)) {
      auto lower = sigma.find(Atom::jet(f, mu));
      if (lower == sigma.end()) throw Error("section does not assign " + print(Atom::jet(f, mu), p));
      for (std::size_t lam = 0; lam < p.n; ++lam) {
        Atom target = Atom::jet(f, mu.raised(lam));
        auto upper = sigma.find(target);
        if (upper == sigma.end()) {
          if (mu.order() == p.k - 1) continue;
          throw Error("section does not assign " + print(target, p));
        }
        std::string label = "holonomy " + print(Atom::jet(f, mu), p) + " d" + p.base_names[lam];
        out.push_back({label, total_derivative(lower->second, static_cast<int>(lam)), upper->second});
      }
    }
  }
  return out;
}

MomentumAssignment apply_momentum_gauge(const MomentumAssignment& m, const MomentumAssignment& chi) {
  check_grid(m, chi);
  for (int f = 0; f < static_cast<int>(m.fields()); ++f) {
    for (int level = 1; level <= m.k(); ++level) {
      for (const auto& nu : multi_indices_of_order(m.n(), level)) {
        if (!chi.symmetrized(f, nu).is_zero()) throw Error("gauge table has a nonzero symmetrization");
      }
    }
  }
  MomentumAssignment added = chi;
  for (int f = 0; f < static_cast<int>(m.fields()); ++f) {
    for (int level = m.k() - 1; level >= 1; --level) {
      for (const auto& mu : multi_indices_of_order(m.n(), level)) {
        Expr d = -divergence_of_slots(added, f, mu);
        if (d.is_zero()) continue;
        for (std::size_t lam = 0; lam < m.n(); ++lam) {
          if (!mu.has(lam)) continue;
          MultiIndex rho = mu.lowered(lam);
          added.add({f, rho, static_cast<int>(lam)}, symmetric_slot_weight(rho, static_cast<int>(lam)) * d);
        }
      }
    }
  }
  MomentumAssignment out = m;
  for (const auto& [key, v] : added.slots()) out.add(key, v);
  return out;
}

MomentumAssignment symmetrize_momenta(const MomentumAssignment& m) {
  MomentumAssignment out = m;
  for (int level = m.k() - 1; level >= 0; --level) {
    MomentumAssignment chi(m.n(), m.fields(), m.k());
    bool any = false;
    for (int f = 0; f < static_cast<int>(m.fields()); ++f) {
      for (const auto& mu : multi_indices_of_order(m.n(), level)) {
        for (std::size_t lam = 0; lam < m.n(); ++lam) {
          int l = static_cast<int>(lam);
          Expr rep = symmetric_slot_weight(mu, l) * out.symmetrized(f, mu.raised(lam));
          Expr diff = rep - out.at(f, mu, l);
          if (!diff.is_zero()) any = true;
          chi.set(f, mu, l, std::move(diff));
        }
      }
    }
    if (any) out = apply_momentum_gauge(out, chi);
  }
  return out;
}

MomentumAssignment symmetric_part(const MomentumAssignment& m) {
  MomentumAssignment out(m.n(), m.fields(), m.k());
  for (const auto& [key, _] : m.slots()) {
    out.set(key, symmetric_slot_weight(key.mu, key.last) * m.symmetrized(key.field, key.mu.raised(key.last)));
  }
  return out;
}

EquationSet constrained_generating_family(const LagrangianProblem& p) {
  if (p.constraints.empty()) {
    return cascade_equations(p);
  }
  if (p.k != 1) throw Error("constrained families are supported at first order only");
  for (const auto& c : p.constraints) {
    if (max_jet_order(c) > 1) throw Error("constraint depends on jets of order greater than 1");
  }
  EquationSet out;
  auto with_multipliers = [&](int f, const MultiIndex& mu) {
    Expr e = lagrangian_gradient(p, f, mu);
    for (std::size_t a = 0; a < p.constraints.size(); ++a) {
      e += Expr(Atom::multiplier(static_cast<int>(a))) * partial_derivative(p.constraints[a], Atom::jet(f, mu));
    }
    return e;
  };
  for (int f = 0; f < static_cast<int>(p.fields.size()); ++f) {
    for (std::size_t lam = 0; lam < p.n; ++lam) {
      Atom lhs = Atom::symmetric_momentum(f, p.unit(static_cast<int>(lam)));
      out.push_back({print(lhs, p), Expr(lhs), with_multipliers(f, p.unit(static_cast<int>(lam)))});
    }
    MultiIndex zero(p.n);
    out.push_back({"EL " + p.fields[f], Expr(), with_multipliers(f, zero) - symbolic_divergence(p.n, f, zero)});
  }
  return out;
}

PsiReduction psi_reduction(const std::vector<Expr>& p, const std::vector<std::vector<Expr>>& dp) {
  if (dp.size() != p.size()) throw Error("momentum derivative table has the wrong size");
  PsiReduction out;
  out.momenta = p;
  for (std::size_t mu = 0; mu < p.size(); ++mu) {
    if (dp[mu].size() != p.size()) throw Error("momentum derivative table has the wrong size");
    out.trace += dp[mu][mu];
  }
  return out;
}

}  // namespace jetcalc
