#include "jetcalc/problem.hpp"

#include <algorithm>

#include "jetcalc/calculus.hpp"

namespace jetcalc {

Symbols Symbols::standard(std::size_t n, std::vector<std::string> fields) {
  Symbols s;
  s.n = n;
  for (std::size_t i = 0; i < n; ++i) s.base_names.push_back("x" + std::to_string(i + 1));
  s.fields = std::move(fields);
  return s;
}

int Symbols::field_index(const std::string& name) const {
  auto it = std::find(fields.begin(), fields.end(), name);
  return it == fields.end() ? -1 : static_cast<int>(it - fields.begin());
}

int Symbols::base_index(const std::string& name) const {
  auto it = std::find(base_names.begin(), base_names.end(), name);
  return it == base_names.end() ? -1 : static_cast<int>(it - base_names.begin());
}

bool Symbols::has_param(const std::string& name) const {
  return std::find(params.begin(), params.end(), name) != params.end();
}

void LagrangianProblem::validate() const {
  if (n < 1) throw Error("base dimension must be at least 1");
  if (k < 1) throw Error("order must be at least 1");
  if (fields.empty()) throw Error("no fields declared");
  auto check = [&](const Expr& e, const char* what) {
    for (const auto& a : all_atoms_of(e)) {
      if (a.kind() == AtomKind::Momentum || a.kind() == AtomKind::Multiplier) {
        throw Error(std::string(what) + " must not contain momentum or multiplier atoms");
      }
      if (a.kind() == AtomKind::Jet && a.multi_index().order() > k) throw Error("jet order exceeds k");
    }
  };
  check(lagrangian, "lagrangian");
  for (const auto& c : constraints) check(c, "constraint");
}

}  // namespace jetcalc
