#include "jetcalc/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace jetcalc {

namespace {

void check_dim(std::size_t n) {
  if (n > kMaxBaseDim) {
    throw std::invalid_argument("base dimension " + std::to_string(n) + " exceeds the supported maximum " +
                                std::to_string(kMaxBaseDim));
  }
}

long long factorial(int k) {
  long long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

void enumerate(std::size_t n, std::size_t pos, int remaining, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (pos + 1 == n) {
    cur.set(pos, remaining);
    out.push_back(cur);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur.set(pos, v);
    enumerate(n, pos + 1, remaining - v, cur, out);
  }
}

}  // namespace

MultiIndex::MultiIndex(std::size_t n) : n_(static_cast<std::uint8_t>(n)) { check_dim(n); }

MultiIndex::MultiIndex(std::initializer_list<int> exponents) : MultiIndex(exponents.size()) {
  std::size_t i = 0;
  for (int v : exponents) set(i++, v);
}

MultiIndex MultiIndex::unit(std::size_t n, std::size_t dir) {
  MultiIndex m(n);
  m.set(dir, 1);
  return m;
}

void MultiIndex::set(std::size_t i, int value) {
  if (i >= n_) throw std::out_of_range("multi-index direction out of range");
  if (value < 0 || value > 255) throw std::out_of_range("multi-index entry out of range");
  e_[i] = static_cast<std::uint8_t>(value);
}

int MultiIndex::order() const { return std::accumulate(e_.begin(), e_.begin() + n_, 0); }

MultiIndex MultiIndex::raised(std::size_t dir) const {
  MultiIndex m = *this;
  m.set(dir, e_[dir] + 1);
  return m;
}

MultiIndex MultiIndex::lowered(std::size_t dir) const {
  if (dir >= n_ || e_[dir] == 0) throw std::logic_error("cannot lower a zero multi-index entry");
  MultiIndex m = *this;
  m.e_[dir] -= 1;
  return m;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (other.n_ != n_) throw std::invalid_argument("multi-index length mismatch");
  MultiIndex m = *this;
  for (std::size_t i = 0; i < n_; ++i) m.set(i, e_[i] + other.e_[i]);
  return m;
}

std::vector<MultiIndex> multi_indices_of_order(std::size_t n, int order) {
  std::vector<MultiIndex> out;
  if (order < 0) return out;
  MultiIndex cur(n);
  if (n == 0) {
    if (order == 0) out.push_back(cur);
    return out;
  }
  enumerate(n, 0, order, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MultiIndex> multi_indices_up_to(std::size_t n, int max_order) {
  std::vector<MultiIndex> out;
  for (int l = 0; l <= max_order; ++l) {
    auto level = multi_indices_of_order(n, l);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

long long multinomial_weight(const MultiIndex& mu) {
  long long w = factorial(mu.order());
  for (std::size_t i = 0; i < mu.size(); ++i) w /= factorial(mu[i]);
  return w;
}

std::pair<MultiIndex, long long> multiindex_factor(std::span<const int> indices, std::size_t n) {
  MultiIndex mu(n);
  for (int idx : indices) {
    if (idx < 1 || static_cast<std::size_t>(idx) > n) {
      throw std::out_of_range("index " + std::to_string(idx) + " outside 1.." + std::to_string(n));
    }
    mu = mu.raised(static_cast<std::size_t>(idx - 1));
  }
  return {mu, multinomial_weight(mu)};
}

}  // namespace jetcalc
