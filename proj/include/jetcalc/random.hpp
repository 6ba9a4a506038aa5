#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "jetcalc/expr.hpp"
#include "jetcalc/problem.hpp"
#include "jetcalc/prolongation.hpp"
#include "jetcalc/variational.hpp"

namespace jetcalc {

/// Seeded generator of random test instances. Coefficients are integers in
/// [-bound, bound]; every instance is reproducible from the seed.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi);
  int nonzero(int bound = 3);

  /// Sum of `terms` random products of at most `max_degree` atoms.
  Expr polynomial(const std::vector<Atom>& atoms, int max_degree, int terms, int bound = 3);

  /// Jet atoms of `field` with |mu| in [lo, hi].
  static std::vector<Atom> jets(std::size_t n, int field, int lo, int hi);
  static std::vector<Atom> base(std::size_t n);

  /// Single field u on n base coordinates, order k, polynomial L of degree <= `degree`.
  LagrangianProblem lagrangian(std::size_t n, int k, int degree);

  /// L = 1/2 A(top, top) + top * (lower) + (lower), A symmetric with nonzero integer determinant.
  LagrangianProblem quadratic_lagrangian(std::size_t n, int k);

  /// F^lambda built from jets of order <= max_order (and the base coordinates).
  std::vector<Expr> divergence_components(std::size_t n, int max_order, int degree = 2);

  /// Gauge table on the (n, k) grid whose symmetrizations all vanish.
  MomentumAssignment gauge(std::size_t n, int k, std::size_t fields);

  /// Arbitrary momentum assignment with polynomial entries.
  MomentumAssignment momenta(std::size_t n, int k, std::size_t fields);

  /// Homogeneous polynomial in `vars` variables (as base atoms x1..x_vars).
  HomogeneousPoly homogeneous(std::size_t vars, int degree);

  /// psi(x, u, u_mu) with jets of order <= max_order.
  Expr vertical_component(std::size_t n, int max_order);

  /// Polynomial section u(x).
  Expr section(std::size_t n, int max_degree);

 private:
  Expr entry(std::size_t n, int max_order);

  std::mt19937_64 rng_;
};

}  // namespace jetcalc
