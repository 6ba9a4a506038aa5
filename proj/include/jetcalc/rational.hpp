#pragma once

#include <gmpxx.h>

#include <string>

namespace jetcalc {

/// Exact rational coefficient. All symbolic arithmetic is done over Q.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// "3", "-1/2", ...
inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace jetcalc
