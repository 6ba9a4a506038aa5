#include "jetcalc/printer.hpp"

#include <algorithm>

namespace jetcalc {

namespace {

std::string field_name(const Symbols& s, int field) {
  if (field >= 0 && static_cast<std::size_t>(field) < s.fields.size()) return s.fields[field];
  return "phi" + std::to_string(field + 1);
}

std::string base_name(const Symbols& s, int dir) {
  if (dir >= 0 && static_cast<std::size_t>(dir) < s.base_names.size()) return s.base_names[dir];
  return "x" + std::to_string(dir + 1);
}

std::string latex_indices(const MultiIndex& mu, const Symbols& s) {
  std::string out;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    for (int r = 0; r < mu[i]; ++r) out += base_name(s, static_cast<int>(i));
  }
  return out;
}

std::string markers(const std::vector<int>& derivs) {
  if (derivs.empty()) return {};
  std::string out = "_{,";
  for (int d : derivs) out += std::to_string(d + 1);
  return out + "}";
}

template <class AtomPrinter>
std::string render(const Expr& e, AtomPrinter&& atom, bool latex) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : e.terms()) {
    Rational c = t.coeff;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string factors;
    Monomial ordered = t.monomial;
    std::stable_partition(ordered.begin(), ordered.end(), [](const auto& f) { return f.first.kind() == AtomKind::Parameter; });
    for (const auto& [a, p] : ordered) {
      if (!factors.empty()) factors += latex ? " " : "*";
      std::string text = atom(a);
      if (p != 1) text += latex ? "^{" + std::to_string(p) + "}" : "^" + std::to_string(p);
      factors += text;
    }
    bool unit = c == 1;
    std::string coeff;
    if (latex && c.get_den() != 1) {
      coeff = "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
    } else {
      coeff = c.get_str();
    }
    if (factors.empty()) {
      out += coeff;
    } else if (unit) {
      out += factors;
    } else {
      out += coeff + (latex ? " " : "*") + factors;
    }
  }
  return out;
}

}  // namespace

std::string print_multi_index(const MultiIndex& mu) {
  if (mu.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(mu[i]);
  }
  return out.empty() ? "0" : out;
}

std::string print(const Atom& a, const Symbols& s) {
  switch (a.kind()) {
    case AtomKind::Base:
      return base_name(s, a.direction());
    case AtomKind::Jet: {
      std::string name = field_name(s, a.field());
      if (a.multi_index().is_zero()) return name;
      return name + "[" + print_multi_index(a.multi_index()) + "]";
    }
    case AtomKind::Momentum: {
      std::string out = "p_" + field_name(s, a.field()) + "[" + print_multi_index(a.multi_index());
      if (a.last_index() >= 0) out += ";" + std::to_string(a.last_index() + 1);
      if (!a.derivative().is_zero()) out += "|" + print_multi_index(a.derivative());
      return out + "]";
    }
    case AtomKind::Multiplier:
      return "lambda[" + std::to_string(a.index() + 1) + "]";
    case AtomKind::Parameter:
      return a.name();
    case AtomKind::Function: {
      const auto& call = a.call();
      std::string out = call.name + markers(call.derivs) + "(";
      for (std::size_t i = 0; i < call.args.size(); ++i) {
        if (i) out += ", ";
        out += print(call.args[i], s);
      }
      return out + ")";
    }
  }
  return "?";
}

std::string print(const Expr& e, const Symbols& s) {
  return render(e, [&](const Atom& a) { return print(a, s); }, false);
}

std::string print_latex(const Atom& a, const Symbols& s) {
  switch (a.kind()) {
    case AtomKind::Base:
      return base_name(s, a.direction());
    case AtomKind::Jet: {
      std::string name = field_name(s, a.field());
      if (a.multi_index().is_zero()) return name;
      return name + "_{" + latex_indices(a.multi_index(), s) + "}";
    }
    case AtomKind::Momentum: {
      std::string upper = latex_indices(a.multi_index(), s);
      if (a.last_index() >= 0) {
        upper += (upper.empty() ? "" : ",") + base_name(s, a.last_index());
      } else {
        upper = "(" + upper + ")";
      }
      std::string out = "p_{" + field_name(s, a.field()) + "}^{" + upper + "}";
      if (!a.derivative().is_zero()) out = "\\partial_{" + latex_indices(a.derivative(), s) + "} " + out;
      return out;
    }
    case AtomKind::Multiplier:
      return "\\lambda^{" + std::to_string(a.index() + 1) + "}";
    case AtomKind::Parameter:
      return a.name();
    case AtomKind::Function: {
      const auto& call = a.call();
      std::string out = call.name + markers(call.derivs) + "\\left(";
      for (std::size_t i = 0; i < call.args.size(); ++i) {
        if (i) out += ", ";
        out += print_latex(call.args[i], s);
      }
      return out + "\\right)";
    }
  }
  return "?";
}

std::string print_latex(const Expr& e, const Symbols& s) {
  return render(e, [&](const Atom& a) { return print_latex(a, s); }, true);
}

std::string print(const ExteriorForm& f, const Symbols& s) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [factors, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + print(c, s) + ")";
    for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? " ^ d(" : " d(") + print(factors[i], s) + ")";
  }
  return out;
}

std::string print_latex(const ExteriorForm& f, const Symbols& s) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [factors, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += "\\left(" + print_latex(c, s) + "\\right)";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      out += std::string(i ? " \\wedge " : " ") + "\\mathrm{d}" + print_latex(factors[i], s);
    }
  }
  return out;
}

}  // namespace jetcalc
