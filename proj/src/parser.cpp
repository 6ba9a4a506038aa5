#include "jetcalc/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "jetcalc/calculus.hpp"

namespace jetcalc {

ParseError::ParseError(const std::string& message, int line, int column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line), column_(column) {}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < pos && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_ident() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string ident() {
    skip_space();
    if (!peek_ident()) fail("expected identifier");
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  int integer() {
    skip_space();
    if (!peek_digit()) fail("expected integer");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1000000) fail("integer too large");
    }
    return static_cast<int>(v);
  }

  Rational number() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    std::string den = "1";
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits += text_[pos_++];
        den += "0";
      }
    }
    if (digits.empty()) fail_at(start, "expected number");
    Rational r{mpz_class(digits, 10), mpz_class(den, 10)};
    r.canonicalize();
    return r;
  }

  std::size_t pos() const { return pos_; }
  void set_pos(std::size_t p) { pos_ = p; }
  char raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class ExprParser {
 public:
  ExprParser(Cursor& cur, const Symbols& s, int max_order) : cur_(cur), s_(s), max_order_(max_order) {}

  Expr expr() {
    Expr out = term();
    while (true) {
      if (cur_.accept('+')) {
        out += term();
      } else if (cur_.accept('-')) {
        out -= term();
      } else {
        return out;
      }
    }
  }

  Atom atom_only() {
    std::size_t start = cur_.pos();
    Expr e = primary();
    if (!e.is_monomial() || e.terms()[0].coeff != 1 || e.terms()[0].monomial.size() != 1 ||
        e.terms()[0].monomial[0].second != 1) {
      cur_.fail_at(start, "expected a single coordinate");
    }
    return e.terms()[0].monomial[0].first;
  }

 private:
  Expr term() {
    Expr out = unary();
    while (true) {
      if (cur_.accept('*')) {
        out = out * unary();
      } else if (cur_.peek() == '/') {
        std::size_t at = cur_.pos();
        cur_.accept('/');
        Expr d = unary();
        if (d.is_zero()) cur_.fail_at(at, "division by zero");
        if (!d.is_monomial()) cur_.fail_at(at, "division by a non-monomial expression");
        out = out / d;
      } else {
        return out;
      }
    }
  }

  Expr unary() {
    if (cur_.accept('-')) return -unary();
    if (cur_.accept('+')) return unary();
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (cur_.accept('^')) {
      std::size_t at = cur_.pos();
      bool negative = cur_.accept('-');
      bool paren = !negative && cur_.accept('(');
      if (paren) negative = cur_.accept('-');
      int p = cur_.integer();
      if (paren) cur_.expect(')');
      if (negative) {
        if (base.is_zero()) cur_.fail_at(at, "division by zero");
        if (!base.is_monomial()) cur_.fail_at(at, "negative power of a non-monomial expression");
        p = -p;
      }
      return base.pow(p);
    }
    return base;
  }

  MultiIndex multi_index_list(std::size_t start) {
    std::vector<int> entries;
    entries.push_back(cur_.integer());
    while (cur_.accept(',')) entries.push_back(cur_.integer());
    MultiIndex mu(s_.n);
    if (entries.size() == 1 && entries[0] == 0) return mu;
    if (entries.size() != s_.n) {
      cur_.fail_at(start, "multi-index needs " + std::to_string(s_.n) + " entries");
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i] > 255) cur_.fail_at(start, "multi-index entry too large");
      mu.set(i, entries[i]);
    }
    return mu;
  }

  Expr jet(int field, std::size_t start) {
    MultiIndex mu(s_.n);
    if (cur_.accept('[')) {
      mu = multi_index_list(start);
      cur_.expect(']');
    }
    if (max_order_ >= 0 && mu.order() > max_order_) cur_.fail_at(start, "jet order exceeds k");
    return Expr(Atom::jet(field, mu));
  }

  Expr momentum(int field, std::size_t start) {
    cur_.expect('[');
    MultiIndex mu = multi_index_list(start);
    int last = -1;
    if (cur_.accept(';')) {
      std::size_t at = cur_.pos();
      last = cur_.integer() - 1;
      if (last < 0 || static_cast<std::size_t>(last) >= s_.n) cur_.fail_at(at, "momentum index out of range");
    }
    MultiIndex deriv(s_.n);
    if (cur_.accept('|')) deriv = multi_index_list(start);
    cur_.expect(']');
    return Expr(Atom::momentum(field, mu, last, deriv));
  }

  Expr function(const std::string& name, std::vector<int> derivs, std::size_t start) {
    int arity = s_.opaque.at(name);
    cur_.expect('(');
    std::vector<Expr> args;
    if (!cur_.accept(')')) {
      args.push_back(expr());
      while (cur_.accept(',')) args.push_back(expr());
      cur_.expect(')');
    }
    if (static_cast<int>(args.size()) != arity) {
      cur_.fail_at(start, name + " expects " + std::to_string(arity) + " arguments");
    }
    for (int d : derivs) {
      if (d < 0 || d >= arity) cur_.fail_at(start, "derivative marker out of range for " + name);
    }
    return Expr(Atom::function(name, std::move(derivs), std::move(args)));
  }

  Expr primary() {
    std::size_t start = (cur_.skip_space(), cur_.pos());
    if (cur_.accept('(')) {
      Expr e = expr();
      cur_.expect(')');
      return e;
    }
    if (cur_.peek_digit() || cur_.peek() == '.') return Expr(cur_.number());
    if (!cur_.peek_ident()) {
      if (cur_.at_end()) cur_.fail("unexpected end of input");
      cur_.fail(std::string("unexpected '") + cur_.peek() + "'");
    }
    std::string name = cur_.ident();
    if (name.size() > 1 && name.back() == '_' && cur_.raw() == '{') {
      std::string fname = name.substr(0, name.size() - 1);
      if (!s_.opaque.contains(fname)) cur_.fail_at(start, "unknown function '" + fname + "'");
      cur_.expect('{');
      cur_.expect(',');
      std::vector<int> derivs;
      cur_.skip_space();
      while (std::isdigit(static_cast<unsigned char>(cur_.raw()))) {
        derivs.push_back(cur_.raw() - '1');
        cur_.set_pos(cur_.pos() + 1);
      }
      if (derivs.empty()) cur_.fail("expected derivative markers");
      cur_.expect('}');
      return function(fname, std::move(derivs), start);
    }
    if (int b = s_.base_index(name); b >= 0) return Expr(Atom::base(b));
    if (s_.has_param(name)) return Expr(Atom::parameter(name));
    if (int f = s_.field_index(name); f >= 0) return jet(f, start);
    if (s_.opaque.contains(name)) return function(name, {}, start);
    if (name.starts_with("p_")) {
      if (int f = s_.field_index(name.substr(2)); f >= 0) return momentum(f, start);
    }
    if (name == "lambda" && cur_.accept('[')) {
      int a = cur_.integer();
      if (a < 1) cur_.fail_at(start, "multiplier index must be positive");
      cur_.expect(']');
      return Expr(Atom::multiplier(a - 1));
    }
    cur_.fail_at(start, "unknown identifier '" + name + "'");
  }

  Cursor& cur_;
  const Symbols& s_;
  int max_order_;
};

void check_new_name(Cursor& cur, std::size_t at, const Symbols& s, const std::string& name) {
  if (s.base_index(name) >= 0 || s.has_param(name) || s.field_index(name) >= 0 || s.opaque.contains(name)) {
    cur.fail_at(at, "duplicate declaration of '" + name + "'");
  }
  if (name == "lambda" || name.starts_with("p_")) cur.fail_at(at, "reserved name '" + name + "'");
}

void ensure_base(Symbols& s, bool& declared) {
  if (!declared) {
    s.n = 1;
    s.base_names = {"x1"};
    declared = true;
  }
}

}  // namespace

Expr parse_expr(std::string_view text, const Symbols& s, int max_jet_order) {
  Cursor cur(text);
  ExprParser p(cur, s, max_jet_order);
  Expr e = p.expr();
  if (!cur.at_end()) cur.fail(std::string("unexpected '") + cur.peek() + "'");
  return e;
}

Expr parse_expr(std::string_view text, const LagrangianProblem& p) { return parse_expr(text, p, p.k); }

Atom parse_atom(std::string_view text, const Symbols& s) {
  Cursor cur(text);
  ExprParser p(cur, s, -1);
  Atom a = p.atom_only();
  if (!cur.at_end()) cur.fail(std::string("unexpected '") + cur.peek() + "'");
  return a;
}

ProblemFile parse_problem(std::string_view text) {
  ProblemFile out;
  LagrangianProblem& prob = out.problem;
  prob.n = 0;
  bool base_declared = false;
  int order = -1;
  Cursor cur(text);

  auto parse_value = [&](int max_order = -1) {
    ensure_base(prob, base_declared);
    cur.accept('=');
    ExprParser p(cur, prob, max_order);
    return p.expr();
  };

  while (!cur.at_end()) {
    std::size_t at = cur.pos();
    std::string kw = cur.ident();
    if (kw == "base") {
      if (base_declared) cur.fail_at(at, "base dimension declared twice");
      int n = cur.integer();
      if (n < 1 || static_cast<std::size_t>(n) > kMaxBaseDim) cur.fail_at(at, "unsupported base dimension");
      prob.n = static_cast<std::size_t>(n);
      if (cur.accept('(')) {
        for (int i = 0; i < n; ++i) {
          if (i) cur.expect(',');
          std::size_t nat = cur.pos();
          std::string name = cur.ident();
          check_new_name(cur, nat, prob, name);
          prob.base_names.push_back(name);
        }
        cur.expect(')');
      } else {
        for (int i = 0; i < n; ++i) prob.base_names.push_back("x" + std::to_string(i + 1));
      }
      base_declared = true;
    } else if (kw == "field") {
      do {
        std::size_t nat = cur.pos();
        std::string name = cur.ident();
        check_new_name(cur, nat, prob, name);
        prob.fields.push_back(name);
      } while (cur.accept(','));
    } else if (kw == "param") {
      do {
        std::size_t nat = cur.pos();
        std::string name = cur.ident();
        check_new_name(cur, nat, prob, name);
        prob.params.push_back(name);
      } while (cur.accept(','));
    } else if (kw == "opaque") {
      std::size_t nat = cur.pos();
      std::string name = cur.ident();
      check_new_name(cur, nat, prob, name);
      cur.expect('(');
      int arity = cur.integer();
      if (arity < 1 || arity > 9) cur.fail_at(nat, "opaque arity must be between 1 and 9");
      cur.expect(')');
      prob.opaque[name] = arity;
    } else if (kw == "order") {
      order = cur.integer();
      if (order < 1) cur.fail_at(at, "order must be at least 1");
    } else if (kw == "lagrangian") {
      if (out.has_lagrangian) cur.fail_at(at, "lagrangian declared twice");
      prob.lagrangian = parse_value(order);
      out.has_lagrangian = true;
    } else if (kw == "constraint") {
      prob.constraints.push_back(parse_value(order));
    } else if (kw == "polynomial") {
      out.polynomial = parse_value();
    } else if (kw == "section" || kw == "divergence" || kw == "vertical") {
      ensure_base(prob, base_declared);
      cur.expect('{');
      while (!cur.accept('}')) {
        if (cur.at_end()) cur.fail("unterminated block");
        if (kw == "divergence") {
          out.divergence.push_back(parse_value());
        } else {
          std::size_t lat = cur.pos();
          ExprParser p(cur, prob, -1);
          Atom lhs = p.atom_only();
          cur.expect('=');
          Expr rhs = parse_value();
          if (kw == "section") {
            if (!lhs.is_fibre()) cur.fail_at(lat, "section assigns jet or momentum coordinates only");
            if (depends_on(rhs, [](const Atom& a) { return a.is_fibre() || a.kind() == AtomKind::Multiplier; })) {
              cur.fail_at(lat, "section values must depend on base coordinates only");
            }
            out.section[lhs] = rhs;
          } else {
            if (lhs.kind() != AtomKind::Jet || !lhs.multi_index().is_zero()) {
              cur.fail_at(lat, "vertical block assigns fields only");
            }
            out.vertical[lhs.field()] = rhs;
          }
        }
        cur.expect(';');
      }
      cur.accept(';');
      continue;
    } else {
      cur.fail_at(at, "unknown statement '" + kw + "'");
    }
    cur.expect(';');
  }
  ensure_base(prob, base_declared);
  if (!out.divergence.empty() && out.divergence.size() != prob.n) {
    throw ParseError("divergence block needs " + std::to_string(prob.n) + " components", 1, 1);
  }
  int observed = std::max(max_jet_order(prob.lagrangian), 1);
  for (const auto& c : prob.constraints) observed = std::max(observed, max_jet_order(c));
  if (order < 0) {
    prob.k = observed;
  } else {
    if (observed > order && out.has_lagrangian) throw ParseError("jet order exceeds k", 1, 1);
    prob.k = order;
  }
  return out;
}

ProblemFile load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

}  // namespace jetcalc
