#include "jetcalc/app.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>

#include "jetcalc/calculus.hpp"
#include "jetcalc/divergence.hpp"
#include "jetcalc/legendre.hpp"
#include "jetcalc/parser.hpp"
#include "jetcalc/poincare_cartan.hpp"
#include "jetcalc/printer.hpp"
#include "jetcalc/prolongation.hpp"
#include "jetcalc/variational.hpp"
#include "jetcalc/verification.hpp"

namespace jetcalc {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string command;
  std::string file;
  bool latex = false;
  std::uint64_t seed = 0;
  int order_cap = 12;
  int time = 1;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class Report {
 public:
  Report(const Options& o, const Symbols* s) : latex_(o.latex), symbols_(s) { doc_["command"] = o.command; }

  void problem(const LagrangianProblem& p) {
    doc_["problem"] = {{"n", p.n}, {"k", p.k}, {"fields", p.fields}};
  }

  std::string text(const Expr& e) const { return latex_ ? print_latex(e, *symbols_) : print(e, *symbols_); }
  std::string text(const ExteriorForm& f) const { return latex_ ? print_latex(f, *symbols_) : print(f, *symbols_); }
  std::string name(const Atom& a) const { return print(a, *symbols_); }

  Json& result() { return doc_["result"]; }

  template <class T>
  void residual(const std::string& label, const T& value) {
    if (!value.is_zero()) failed_ = true;
    residuals_.push_back({{"label", label}, {"expr", text(value)}});
  }

  void residuals(const EquationSet& eqs) {
    for (const auto& eq : eqs) residual(eq.label, eq.residual());
  }

  void failure(const std::string& label, const std::string& detail) {
    failed_ = true;
    residuals_.push_back({{"label", label}, {"expr", detail}});
  }

  void fail() { failed_ = true; }
  bool failed() const { return failed_; }

  void emit(std::ostream& out) {
    if (!doc_.contains("result")) doc_["result"] = Json::object();
    doc_["residuals"] = residuals_;
    if (!latex_) {
      out << doc_.dump(2) << "\n";
      return;
    }
    out << "% jetcalc " << doc_["command"].get<std::string>() << "\n\\begin{align*}\n";
    flatten(out, "", doc_["result"]);
    for (const auto& r : residuals_) {
      out << "\\text{" << escape(r["label"].get<std::string>()) << "} &= " << r["expr"].get<std::string>() << " \\\\\n";
    }
    out << "\\end{align*}\n";
  }

 private:
  static std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '_' || c == '#' || c == '&' || c == '%' || c == '^') out += '\\';
      out += c;
    }
    return out;
  }

  static void flatten(std::ostream& out, const std::string& prefix, const Json& node) {
    if (node.is_object()) {
      for (const auto& [key, value] : node.items()) flatten(out, prefix.empty() ? key : prefix + "." + key, value);
      return;
    }
    std::string value = node.is_string() ? node.get<std::string>() : node.dump();
    out << "\\text{" << escape(prefix) << "} &= " << value << " \\\\\n";
  }

  bool latex_;
  const Symbols* symbols_;
  bool failed_ = false;
  Json doc_;
  Json residuals_ = Json::array();
};

ProblemFile load(const Options& o) {
  if (o.file.empty()) throw InputError("command '" + o.command + "' needs a problem file");
  return load_problem(o.file);
}

void require_lagrangian(const ProblemFile& f) {
  if (!f.has_lagrangian) throw InputError("problem file has no lagrangian");
}

std::string current_name(const Symbols& s, int field, const MultiIndex& mu) {
  return "j_" + s.fields[static_cast<std::size_t>(field)] + "[" + print_multi_index(mu) + "]";
}

Json equations_json(const EquationSet& eqs, const Report& r) {
  Json out = Json::object();
  for (const auto& eq : eqs) out[eq.label] = r.text(eq.rhs);
  return out;
}

Json momenta_json(const MomentumAssignment& m, const Report& r) {
  Json out = Json::object();
  for (const auto& [key, value] : m.slots()) out[r.name(Atom::momentum(key.field, key.mu, key.last))] = r.text(value);
  return out;
}

void cmd_el(const ProblemFile& f, Report& r) {
  require_lagrangian(f);
  const auto& p = f.problem;
  auto el = euler_lagrange(p);
  Json out = Json::object();
  for (std::size_t i = 0; i < el.size(); ++i) out[p.fields[i]] = r.text(el[i]);
  r.result()["euler_lagrange"] = out;
}

void cmd_cascade(const ProblemFile& f, Report& r) {
  require_lagrangian(f);
  r.result()["equations"] = equations_json(constrained_generating_family(f.problem), r);
}

void cmd_momenta(const ProblemFile& f, Report& r) {
  require_lagrangian(f);
  const auto& p = f.problem;
  MomentumAssignment m = canonical_momenta(p);
  r.result()["momenta"] = momenta_json(m, r);
  Json top = Json::object();
  for (int fi = 0; fi < static_cast<int>(p.fields.size()); ++fi) {
    for (const auto& nu : multi_indices_of_order(p.n, p.k)) top[r.name(Atom::symmetric_momentum(fi, nu))] = r.text(m.top(fi, nu));
  }
  r.result()["top"] = top;
}

void cmd_currents(const ProblemFile& f, Report& r) {
  require_lagrangian(f);
  const auto& p = f.problem;
  Json out = Json::object();
  for (const auto& [key, value] : currents(p, canonical_momenta(p))) out[current_name(p, key.first, key.second)] = r.text(value);
  r.result()["currents"] = out;
}

void cmd_legendre(const ProblemFile& f, Report& r) {
  require_lagrangian(f);
  LegendreData d = legendre_top(f.problem);
  r.result()["h"] = r.text(d.h);
  r.result()["H"] = r.text(d.H);
  r.result()["H_slots"] = r.text(d.H_slots);
  Json inv = Json::object();
  for (const auto& [atom, value] : d.inversion) inv[r.name(atom)] = r.text(value);
  r.result()["inversion"] = inv;
}

void cmd_hamilton(const ProblemFile& f, Report& r) {
  require_lagrangian(f);
  r.result()["equations"] = equations_json(hamilton_equations(f.problem), r);
  if (f.problem.k == 1) {
    FieldHamiltonian fh = field_hamiltonian_first_order(f.problem);
    r.result()["H"] = r.text(fh.H);
    r.result()["first_order"] = equations_json(fh.equations, r);
  }
}

void cmd_energy(const ProblemFile& f, const Options& o, Report& r) {
  require_lagrangian(f);
  r.result()["energy"] = r.text(energy_legendre(f.problem, o.time - 1));
}

void cmd_pc_form(const ProblemFile& f, Report& r) {
  require_lagrangian(f);
  PCForm form = pc_form(f.problem);
  r.result()["H"] = r.text(form.H);
  r.result()["theta"] = r.text(form.theta);
  r.result()["omega"] = r.text(form.omega);
}

void cmd_ms_check(const ProblemFile& f, Report& r) {
  require_lagrangian(f);
  if (f.section.empty()) throw InputError("ms-check needs a section block");
  r.residuals(multisymplectic_residuals(f.problem, f.section));
}

void cmd_check_divergence(const ProblemFile& f, Report& r) {
  if (f.divergence.empty()) throw InputError("check-divergence needs a divergence block");
  DivergenceCheck c = verify_divergence_trivial(f.problem, f.divergence);
  r.result()["L0"] = r.text(c.data.L0);
  r.result()["l"] = std::to_string(c.data.l);
  for (std::size_t i = 0; i < c.euler_lagrange.size(); ++i) r.residual("EL " + f.problem.fields[i], c.euler_lagrange[i]);
  r.residuals(c.residual_table);
  if (!c.ok()) r.fail();
}

void cmd_shift(const ProblemFile& f, Report& r) {
  require_lagrangian(f);
  if (f.divergence.empty()) throw InputError("shift needs a divergence block");
  MomentumAssignment shifted = momentum_shift(canonical_momenta(f.problem), f.divergence, ShiftDirection::Forward);
  r.result()["momenta"] = momenta_json(shifted, r);
  r.residuals(verify_momentum_shift(f.problem, f.divergence));
}

void cmd_prolong(const ProblemFile& f, Report& r) {
  if (f.vertical.empty()) throw InputError("prolong needs a vertical block");
  Json out = Json::object();
  for (const auto& [atom, value] : prolong_vertical_field(f.problem, f.vertical, f.problem.k)) out[r.name(atom)] = r.text(value);
  r.result()["prolongation"] = out;
}

void cmd_polarize(const ProblemFile& f, Report& r) {
  if (!f.polynomial) throw InputError("polarize needs a polynomial statement");
  HomogeneousPoly q = HomogeneousPoly::from_expr(*f.polynomial, f.problem.n);
  auto parts = polarize(q);
  Json out = Json::object();
  for (std::size_t i = 0; i < parts.size(); ++i) out["P" + std::to_string(i + 1)] = r.text(parts[i].to_expr());
  r.result()["polarization"] = out;
  if (q.degree == 2) {
    Json gram = Json::object();
    auto B = gram_matrix(q);
    for (std::size_t i = 0; i < B.size(); ++i) {
      for (std::size_t j = 0; j < B.size(); ++j) gram["B" + std::to_string(i + 1) + std::to_string(j + 1)] = r.text(B[i][j]);
    }
    r.result()["gram"] = gram;
  }
  r.residual("resymmetrized - Q", resymmetrize(parts, q.degree).to_expr() - q.to_expr());
}

void cmd_galilei(Report& r) {
  GalileiReport report = galilei_transform_check();
  for (const auto& item : report.residuals) r.residual(item.label, item.value);
}

void cmd_verify_all(const Options& o, Report& r) {
  Json out = Json::object();
  for (const auto& suite : run_verification(o.seed)) {
    out[suite.name] = (suite.passed ? "passed (" : "FAILED (") + std::to_string(suite.instances) + " instances)";
    if (!suite.passed) r.failure(suite.name, suite.detail);
  }
  r.result()["suites"] = out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Canonical formalism for higher-order Lagrangian field theories"};
  app.add_option("command", o.command, "Operation to run")
      ->required()
      ->check(CLI::IsMember({"el", "cascade", "momenta", "currents", "legendre", "hamilton", "energy", "pc-form",
                             "ms-check", "check-divergence", "shift", "prolong", "polarize", "galilei", "verify-all"}));
  app.add_option("file", o.file, "Problem file");
  app.add_flag("--json", "JSON output (default)");
  app.add_flag("--latex", o.latex, "LaTeX output");
  app.add_option("--seed", o.seed, "Seed for verify-all");
  app.add_option("--order-cap", o.order_cap, "Largest jet order produced by total derivatives")->check(CLI::PositiveNumber);
  app.add_option("--time", o.time, "1-based time direction for energy")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  set_order_cap(o.order_cap);
  try {
    std::optional<ProblemFile> file;
    LagrangianProblem galilei;
    const Symbols* symbols = nullptr;
    if (o.command == "galilei" || o.command == "verify-all") {
      galilei = galilei_problem();
      symbols = &galilei;
    } else {
      file = load(o);
      symbols = &file->problem;
    }
    Report report(o, symbols);
    if (file) report.problem(file->problem);
    if (o.command == "galilei") report.problem(galilei);

    const std::string& c = o.command;
    if (c == "el") cmd_el(*file, report);
    else if (c == "cascade") cmd_cascade(*file, report);
    else if (c == "momenta") cmd_momenta(*file, report);
    else if (c == "currents") cmd_currents(*file, report);
    else if (c == "legendre") cmd_legendre(*file, report);
    else if (c == "hamilton") cmd_hamilton(*file, report);
    else if (c == "energy") cmd_energy(*file, o, report);
    else if (c == "pc-form") cmd_pc_form(*file, report);
    else if (c == "ms-check") cmd_ms_check(*file, report);
    else if (c == "check-divergence") cmd_check_divergence(*file, report);
    else if (c == "shift") cmd_shift(*file, report);
    else if (c == "prolong") cmd_prolong(*file, report);
    else if (c == "polarize") cmd_polarize(*file, report);
    else if (c == "galilei") cmd_galilei(report);
    else cmd_verify_all(o, report);

    report.emit(out);
    return report.failed() ? 1 : 0;
  } catch (const ParseError& e) {
    err << o.file << ":" << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace jetcalc
