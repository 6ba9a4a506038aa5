#include "jetcalc/random.hpp"

#include "jetcalc/legendre.hpp"

namespace jetcalc {

int RandomSource::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

int RandomSource::nonzero(int bound) {
  int v = uniform(1, bound);
  return uniform(0, 1) ? v : -v;
}

Expr RandomSource::polynomial(const std::vector<Atom>& atoms, int max_degree, int terms, int bound) {
  Expr out;
  for (int t = 0; t < terms; ++t) {
    Expr term(uniform(-bound, bound));
    if (term.is_zero()) continue;
    int degree = atoms.empty() ? 0 : uniform(0, max_degree);
    for (int d = 0; d < degree; ++d) term = term * Expr(atoms[static_cast<std::size_t>(uniform(0, static_cast<int>(atoms.size()) - 1))]);
    out += term;
  }
  return out;
}

std::vector<Atom> RandomSource::jets(std::size_t n, int field, int lo, int hi) {
  std::vector<Atom> out;
  for (int level = lo; level <= hi; ++level) {
    for (const auto& mu : multi_indices_of_order(n, level)) out.push_back(Atom::jet(field, mu));
  }
  return out;
}

std::vector<Atom> RandomSource::base(std::size_t n) {
  std::vector<Atom> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Atom::base(static_cast<int>(i)));
  return out;
}

LagrangianProblem RandomSource::lagrangian(std::size_t n, int k, int degree) {
  LagrangianProblem p;
  static_cast<Symbols&>(p) = Symbols::standard(n, {"u"});
  p.k = k;
  auto atoms = jets(n, 0, 0, k);
  auto b = base(n);
  atoms.insert(atoms.end(), b.begin(), b.end());
  p.lagrangian = polynomial(atoms, degree, uniform(2, 6));
  return p;
}

LagrangianProblem RandomSource::quadratic_lagrangian(std::size_t n, int k) {
  LagrangianProblem p;
  static_cast<Symbols&>(p) = Symbols::standard(n, {"u"});
  p.k = k;
  auto top = jets(n, 0, k, k);
  auto lower = jets(n, 0, 0, k - 1);
  auto b = base(n);
  lower.insert(lower.end(), b.begin(), b.end());
  std::size_t N = top.size();
  std::vector<std::vector<Expr>> A;
  do {
    A.assign(N, std::vector<Expr>(N));
    for (std::size_t i = 0; i < N; ++i) {
      A[i][i] = Expr(nonzero());
      for (std::size_t j = i + 1; j < N; ++j) A[i][j] = A[j][i] = Expr(uniform(-1, 1));
    }
  } while (determinant(A).is_zero());
  Expr L;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) L += Rational(1, 2) * A[i][j] * Expr(top[i]) * Expr(top[j]);
    L += Expr(top[i]) * polynomial(lower, 1, uniform(0, 2));
  }
  L += polynomial(lower, 2, uniform(1, 4));
  p.lagrangian = L;
  return p;
}

std::vector<Expr> RandomSource::divergence_components(std::size_t n, int max_order, int degree) {
  auto atoms = jets(n, 0, 0, max_order);
  auto b = base(n);
  atoms.insert(atoms.end(), b.begin(), b.end());
  std::vector<Expr> F;
  for (std::size_t i = 0; i < n; ++i) F.push_back(polynomial(atoms, degree, uniform(1, 4)));
  return F;
}

Expr RandomSource::entry(std::size_t n, int max_order) {
  auto atoms = jets(n, 0, 0, max_order);
  auto b = base(n);
  atoms.insert(atoms.end(), b.begin(), b.end());
  return polynomial(atoms, 2, uniform(1, 3));
}

MomentumAssignment RandomSource::gauge(std::size_t n, int k, std::size_t fields) {
  MomentumAssignment chi(n, fields, k);
  for (int f = 0; f < static_cast<int>(fields); ++f) {
    for (int level = 2; level <= k; ++level) {
      for (const auto& nu : multi_indices_of_order(n, level)) {
        std::vector<int> dirs;
        for (std::size_t lam = 0; lam < n; ++lam) {
          if (nu.has(lam)) dirs.push_back(static_cast<int>(lam));
        }
        if (dirs.size() < 2) continue;
        Expr sum;
        for (std::size_t i = 0; i + 1 < dirs.size(); ++i) {
          Expr v = entry(n, k);
          sum += v;
          chi.set(f, nu.lowered(static_cast<std::size_t>(dirs[i])), dirs[i], v);
        }
        chi.set(f, nu.lowered(static_cast<std::size_t>(dirs.back())), dirs.back(), -sum);
      }
    }
  }
  return chi;
}

MomentumAssignment RandomSource::momenta(std::size_t n, int k, std::size_t fields) {
  MomentumAssignment m(n, fields, k);
  const auto grid = m.slots();
  for (const auto& [key, _] : grid) m.set(key, entry(n, k));
  return m;
}

HomogeneousPoly RandomSource::homogeneous(std::size_t vars, int degree) {
  HomogeneousPoly q;
  q.vars = vars;
  q.degree = degree;
  for (const auto& mu : multi_indices_of_order(vars, degree)) {
    int c = uniform(-3, 3);
    if (c != 0) q.coeffs[mu] = Expr(c);
  }
  return q;
}

Expr RandomSource::vertical_component(std::size_t n, int max_order) { return entry(n, max_order); }

Expr RandomSource::section(std::size_t n, int max_degree) { return polynomial(base(n), max_degree, uniform(2, 5)); }

}  // namespace jetcalc
