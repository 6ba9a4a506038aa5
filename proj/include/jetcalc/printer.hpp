#pragma once

#include <string>

#include "jetcalc/expr.hpp"
#include "jetcalc/forms.hpp"
#include "jetcalc/problem.hpp"

namespace jetcalc {

/// DSL rendering; the output parses back to the same canonical form.
std::string print(const Expr& e, const Symbols& s);
std::string print(const Atom& a, const Symbols& s);

/// LaTeX rendering (display only).
std::string print_latex(const Expr& e, const Symbols& s);
std::string print_latex(const Atom& a, const Symbols& s);

/// Sum of "(coefficient) d(a) ^ d(b)" terms; "0" for the zero form.
std::string print(const ExteriorForm& f, const Symbols& s);
std::string print_latex(const ExteriorForm& f, const Symbols& s);

/// "0", "2,1", ... (DSL form of a multi-index).
std::string print_multi_index(const MultiIndex& mu);

}  // namespace jetcalc
