#include "jetcalc/calculus.hpp"

#include <atomic>
#include <string>

namespace jetcalc {

namespace {

std::atomic<int> g_order_cap{12};

Expr marker_raised(const Atom& f, int slot) {
  const auto& call = f.call();
  auto derivs = call.derivs;
  derivs.push_back(slot);
  return Expr(Atom::function(call.name, std::move(derivs), call.args));
}

Expr chain_rule(const Atom& f, const std::function<Expr(const Expr&)>& inner) {
  const auto& call = f.call();
  Expr out;
  for (std::size_t j = 0; j < call.args.size(); ++j) {
    Expr d = inner(call.args[j]);
    if (!d.is_zero()) out += marker_raised(f, static_cast<int>(j)) * d;
  }
  return out;
}

void check_cap(const MultiIndex& mu) {
  if (mu.order() > g_order_cap.load()) {
    throw Error("derivative order " + std::to_string(mu.order()) + " exceeds the order cap " +
                std::to_string(g_order_cap.load()));
  }
}

void collect(const Expr& e, bool deep, std::set<Atom>& out) {
  for (const auto& t : e.terms()) {
    for (const auto& [a, _] : t.monomial) {
      out.insert(a);
      if (deep && a.kind() == AtomKind::Function) {
        for (const auto& arg : a.call().args) collect(arg, true, out);
      }
    }
  }
}

}  // namespace

Expr derive(const Expr& e, const std::function<Expr(const Atom&)>& on_atom) {
  std::map<Atom, Expr> cache;
  std::vector<Term> out;
  for (const auto& t : e.terms()) {
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      const auto& [a, p] = t.monomial[i];
      auto it = cache.find(a);
      if (it == cache.end()) it = cache.emplace(a, on_atom(a)).first;
      const Expr& da = it->second;
      if (da.is_zero()) continue;
      Monomial rest = t.monomial;
      if (p == 1) {
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        rest[i].second = p - 1;
      }
      Rational c = t.coeff * p;
      for (const auto& dt : da.terms()) out.push_back({multiply(rest, dt.monomial), c * dt.coeff});
    }
  }
  return Expr::from_terms(std::move(out));
}

Expr partial_derivative(const Expr& e, const Atom& c) {
  std::function<Expr(const Atom&)> on_atom = [&](const Atom& a) -> Expr {
    if (a == c) return Expr(1);
    if (a.kind() == AtomKind::Function) {
      return chain_rule(a, [&](const Expr& arg) { return derive(arg, on_atom); });
    }
    return Expr();
  };
  return derive(e, on_atom);
}

Expr total_derivative(const Expr& e, int dir) {
  std::function<Expr(const Atom&)> on_atom = [&](const Atom& a) -> Expr {
    switch (a.kind()) {
      case AtomKind::Base:
        return a.direction() == dir ? Expr(1) : Expr();
      case AtomKind::Jet: {
        MultiIndex mu = a.multi_index().raised(static_cast<std::size_t>(dir));
        check_cap(mu);
        return Expr(Atom::jet(a.field(), mu));
      }
      case AtomKind::Momentum: {
        MultiIndex d = a.derivative().raised(static_cast<std::size_t>(dir));
        check_cap(d);
        return Expr(a.with_derivative(d));
      }
      case AtomKind::Multiplier:
      case AtomKind::Parameter:
        return Expr();
      case AtomKind::Function:
        return chain_rule(a, [&](const Expr& arg) { return derive(arg, on_atom); });
    }
    return Expr();
  };
  return derive(e, on_atom);
}

Expr total_derivative(const Expr& e, const MultiIndex& mu) {
  Expr out = e;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    for (int r = 0; r < mu[i]; ++r) {
      if (out.is_zero()) return out;
      out = total_derivative(out, static_cast<int>(i));
    }
  }
  return out;
}

Expr substitute(const Expr& e, const std::function<std::optional<Expr>(const Atom&)>& replace) {
  std::map<Atom, Expr> cache;
  auto image = [&](const Atom& a) -> const Expr& {
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;
    Expr v;
    if (auto r = replace(a)) {
      v = *r;
    } else if (a.kind() == AtomKind::Function) {
      const auto& call = a.call();
      std::vector<Expr> args;
      args.reserve(call.args.size());
      for (const auto& arg : call.args) args.push_back(substitute(arg, replace));
      v = Expr(Atom::function(call.name, call.derivs, std::move(args)));
    } else {
      v = Expr(a);
    }
    return cache.emplace(a, std::move(v)).first->second;
  };
  Expr out;
  for (const auto& t : e.terms()) {
    Expr prod(t.coeff);
    for (const auto& [a, p] : t.monomial) prod = prod * image(a).pow(p);
    out += prod;
  }
  return out;
}

Expr substitute(const Expr& e, const std::map<Atom, Expr>& values) {
  return substitute(e, [&](const Atom& a) -> std::optional<Expr> {
    auto it = values.find(a);
    if (it == values.end()) return std::nullopt;
    return it->second;
  });
}

std::set<Atom> atoms_of(const Expr& e) {
  std::set<Atom> out;
  collect(e, false, out);
  return out;
}

std::set<Atom> all_atoms_of(const Expr& e) {
  std::set<Atom> out;
  collect(e, true, out);
  return out;
}

bool depends_on(const Expr& e, const std::function<bool(const Atom&)>& pred) {
  for (const auto& a : all_atoms_of(e)) {
    if (pred(a)) return true;
  }
  return false;
}

int max_jet_order(const Expr& e, int field) {
  int best = -1;
  for (const auto& a : all_atoms_of(e)) {
    if (a.kind() == AtomKind::Jet && (field < 0 || a.field() == field)) best = std::max(best, a.multi_index().order());
  }
  return best;
}

void set_order_cap(int cap) { g_order_cap.store(cap); }
int order_cap() { return g_order_cap.load(); }

}  // namespace jetcalc
