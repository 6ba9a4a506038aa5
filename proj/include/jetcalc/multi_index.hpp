#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace jetcalc {

/// Largest base dimension supported by the fixed-capacity multi-index.
inline constexpr std::size_t kMaxBaseDim = 8;

/// Exponent vector over the n base directions: entry i counts how many
/// derivatives are taken along x^(i+1). Directions are 0-based in the API
/// and printed 1-based.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n);
  MultiIndex(std::initializer_list<int> exponents);

  static MultiIndex unit(std::size_t n, std::size_t dir);

  std::size_t size() const { return n_; }
  int operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, int value);

  /// Total derivative order |mu|.
  int order() const;
  bool is_zero() const { return order() == 0; }

  MultiIndex raised(std::size_t dir) const;
  /// Removes one derivative along `dir`; the entry must be positive.
  MultiIndex lowered(std::size_t dir) const;
  bool has(std::size_t dir) const { return e_[dir] > 0; }

  MultiIndex operator+(const MultiIndex& other) const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxBaseDim> e_{};
};

/// All multi-indices of length n with |mu| == order, lexicographically sorted.
std::vector<MultiIndex> multi_indices_of_order(std::size_t n, int order);

/// All multi-indices with |mu| <= max_order, sorted by order then lexicographically.
std::vector<MultiIndex> multi_indices_up_to(std::size_t n, int max_order);

/// Number of ordered index lists (mu_1 ... mu_l) collapsing to `mu`, i.e.
/// |mu|! / (mu_1! ... mu_n!).
long long multinomial_weight(const MultiIndex& mu);

/// Collapses a symmetric index list (1-based directions) into its multi-index
/// together with the multinomial weight relating the two storages.
std::pair<MultiIndex, long long> multiindex_factor(std::span<const int> indices, std::size_t n);

}  // namespace jetcalc
