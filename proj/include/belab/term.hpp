#pragma once

// Identity / quasi-identity language over {->, *, cup, cap, ., oplus, /\, \/, 0, 1}.
//
// Grammar (precedence, loosest first):
//   quasi    := (atom ('&' atom)* '=>')? atom
//   atom     := term ('=' | '<=' | '<=Q') term
//   term     := prod ('->' term)?                     right-associative
//   prod     := postfix (('.'|'cap'|'cup'|'oplus'|'/\'|'\/') postfix)*
//   postfix  := primary '*'*
//   primary  := '0' | '1' | ident | '(' term ')'
//
// meet (/\) and join (\/) evaluate only when the context supplies lattice
// tables; elsewhere they raise EvalError.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "belab/algebra.hpp"

namespace belab {

enum class BinOp { Arrow, Cup, Cap, Odot, Oplus, Meet, Join };
enum class Rel { Eq, Leq, LeqQ };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Var, Const, Star, Bin };
  Kind kind;
  std::string var;        // Kind::Var
  bool const_one = false; // Kind::Const
  BinOp op = BinOp::Arrow;
  TermPtr lhs, rhs;       // Star uses lhs only

  static TermPtr mkvar(std::string v) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Var;
    t->var = std::move(v);
    return t;
  }
  static TermPtr mkconst(bool one) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Const;
    t->const_one = one;
    return t;
  }
  static TermPtr mkstar(TermPtr s) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Star;
    t->lhs = std::move(s);
    return t;
  }
  static TermPtr mkbin(BinOp op, TermPtr l, TermPtr r) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Bin;
    t->op = op;
    t->lhs = std::move(l);
    t->rhs = std::move(r);
    return t;
  }
};

struct Atom {
  Rel rel;
  TermPtr lhs, rhs;
};

struct QuasiIdentity {
  std::vector<Atom> premises;
  Atom conclusion{Rel::Eq, nullptr, nullptr};
  std::vector<std::string> variables;  // declaration order = first occurrence
};

inline bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Var: return a->var == b->var;
    case Term::Kind::Const: return a->const_one == b->const_one;
    case Term::Kind::Star: return term_equal(a->lhs, b->lhs);
    case Term::Kind::Bin:
      return a->op == b->op && term_equal(a->lhs, b->lhs) && term_equal(a->rhs, b->rhs);
  }
  return false;
}

inline bool atom_equal(const Atom& a, const Atom& b) {
  return a.rel == b.rel && term_equal(a.lhs, b.lhs) && term_equal(a.rhs, b.rhs);
}

inline bool quasi_equal(const QuasiIdentity& a, const QuasiIdentity& b) {
  if (a.premises.size() != b.premises.size()) return false;
  for (std::size_t i = 0; i < a.premises.size(); ++i)
    if (!atom_equal(a.premises[i], b.premises[i])) return false;
  return atom_equal(a.conclusion, b.conclusion) && a.variables == b.variables;
}

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

struct Token {
  enum class Kind { Ident, Sym, End } kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto sym = [&](const char* t, std::size_t n) {
    out.push_back({Token::Kind::Sym, std::string(t, n), i});
    i += n;
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') { ++i; continue; }
    if (s.compare(i, 3, "<=Q") == 0) { sym("<=Q", 3); continue; }
    if (s.compare(i, 2, "<=") == 0) { sym("<=", 2); continue; }
    if (s.compare(i, 2, "=>") == 0) { sym("=>", 2); continue; }
    if (s.compare(i, 2, "->") == 0) { sym("->", 2); continue; }
    if (s.compare(i, 2, "/\\") == 0) { sym("/\\", 2); continue; }
    if (s.compare(i, 2, "\\/") == 0) { sym("\\/", 2); continue; }
    if (c == '(' || c == ')' || c == '*' || c == '=' || c == '&' || c == '.') {
      sym(&c, 1);
      continue;
    }
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || (c >= '0' && c <= '9')) {
      std::size_t j = i;
      while (j < s.size() &&
             ((s[j] >= 'a' && s[j] <= 'z') || (s[j] >= 'A' && s[j] <= 'Z') ||
              (s[j] >= '0' && s[j] <= '9') || s[j] == '_'))
        ++j;
      out.push_back({Token::Kind::Ident, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({Token::Kind::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, int max_vars) : toks_(lex(text)), max_vars_(max_vars) {}

  QuasiIdentity parse_quasi() {
    QuasiIdentity q;
    std::vector<Atom> atoms{parse_atom()};
    while (accept("&")) atoms.push_back(parse_atom());
    if (accept("=>")) {
      q.premises = std::move(atoms);
      q.conclusion = parse_atom();
    } else {
      if (atoms.size() != 1) throw ParseError("'&' requires a following '=>'", cur().pos);
      q.conclusion = atoms[0];
    }
    expect_end();
    q.variables = vars_;
    return q;
  }

  TermPtr parse_single_term() {
    TermPtr t = parse_term();
    expect_end();
    return t;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  bool accept(const std::string& sym) {
    if (cur().kind == Token::Kind::Sym && cur().text == sym) { ++pos_; return true; }
    return false;
  }
  void expect_end() {
    if (cur().kind != Token::Kind::End) throw ParseError("trailing input", cur().pos);
  }

  Atom parse_atom() {
    TermPtr l = parse_term();
    Rel rel;
    if (accept("=")) rel = Rel::Eq;
    else if (accept("<=Q")) rel = Rel::LeqQ;
    else if (accept("<=")) rel = Rel::Leq;
    else throw ParseError("expected '=', '<=' or '<=Q'", cur().pos);
    return {rel, l, parse_term()};
  }

  TermPtr parse_term() {
    TermPtr l = parse_prod();
    if (accept("->")) return Term::mkbin(BinOp::Arrow, l, parse_term());
    return l;
  }

  TermPtr parse_prod() {
    TermPtr l = parse_postfix();
    for (;;) {
      BinOp op;
      if (accept(".")) op = BinOp::Odot;
      else if (accept("/\\")) op = BinOp::Meet;
      else if (accept("\\/")) op = BinOp::Join;
      else if (cur().kind == Token::Kind::Ident &&
               (cur().text == "cap" || cur().text == "cup" || cur().text == "oplus")) {
        op = cur().text == "cap" ? BinOp::Cap : cur().text == "cup" ? BinOp::Cup : BinOp::Oplus;
        ++pos_;
      } else
        return l;
      l = Term::mkbin(op, l, parse_postfix());
    }
  }

  TermPtr parse_postfix() {
    TermPtr t = parse_primary();
    while (accept("*")) t = Term::mkstar(t);
    return t;
  }

  TermPtr parse_primary() {
    if (accept("(")) {
      TermPtr t = parse_term();
      if (!accept(")")) throw ParseError("expected ')'", cur().pos);
      return t;
    }
    if (cur().kind == Token::Kind::Ident) {
      std::string id = cur().text;
      std::size_t at = cur().pos;
      ++pos_;
      if (id == "0") return Term::mkconst(false);
      if (id == "1") return Term::mkconst(true);
      if (id == "cap" || id == "cup" || id == "oplus")
        throw ParseError("'" + id + "' is an operator, not a variable", at);
      declare(id, at);
      return Term::mkvar(id);
    }
    throw ParseError("expected a term", cur().pos);
  }

  void declare(const std::string& v, std::size_t at) {
    for (const auto& w : vars_)
      if (w == v) return;
    if (static_cast<int>(vars_.size()) >= max_vars_)
      throw ParseError("formula exceeds the variable cap of " + std::to_string(max_vars_), at);
    vars_.push_back(v);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> vars_;
  int max_vars_;
};

}  // namespace detail

inline constexpr int kDefaultMaxVariables = 6;

inline QuasiIdentity parse_formula(const std::string& text, int max_vars = kDefaultMaxVariables) {
  return detail::Parser(text, max_vars).parse_quasi();
}

// --- printing (canonical; parse(print(q)) == q structurally) ---

namespace detail {

inline int prec(const Term& t) {
  if (t.kind != Term::Kind::Bin) return 3;           // atoms and stars
  return t.op == BinOp::Arrow ? 1 : 2;               // product tier = 2
}

inline std::string op_text(BinOp op) {
  switch (op) {
    case BinOp::Arrow: return "->";
    case BinOp::Cup: return "cup";
    case BinOp::Cap: return "cap";
    case BinOp::Odot: return ".";
    case BinOp::Oplus: return "oplus";
    case BinOp::Meet: return "/\\";
    case BinOp::Join: return "\\/";
  }
  return "?";
}

inline void print_term(const Term& t, std::string& out) {
  auto child = [&](const Term& c, int min_prec) {
    if (prec(c) < min_prec) {
      out += '(';
      print_term(c, out);
      out += ')';
    } else
      print_term(c, out);
  };
  switch (t.kind) {
    case Term::Kind::Var: out += t.var; return;
    case Term::Kind::Const: out += t.const_one ? '1' : '0'; return;
    case Term::Kind::Star: child(*t.lhs, 3); out += '*'; return;
    case Term::Kind::Bin:
      if (t.op == BinOp::Arrow) {
        child(*t.lhs, 2);   // left operand of -> must bind tighter
        out += " -> ";
        child(*t.rhs, 1);   // right side may be another arrow (right-assoc)
      } else {
        child(*t.lhs, 2);   // same-tier chains associate left
        out += ' ';
        out += op_text(t.op);
        out += ' ';
        child(*t.rhs, 3);
      }
      return;
  }
}

}  // namespace detail

inline std::string print_term(const TermPtr& t) {
  std::string s;
  detail::print_term(*t, s);
  return s;
}

inline std::string print_atom(const Atom& a) {
  const char* rel = a.rel == Rel::Eq ? "=" : a.rel == Rel::Leq ? "<=" : "<=Q";
  return print_term(a.lhs) + " " + rel + " " + print_term(a.rhs);
}

inline std::string print_formula(const QuasiIdentity& q) {
  std::string s;
  for (std::size_t i = 0; i < q.premises.size(); ++i) {
    if (i) s += " & ";
    s += print_atom(q.premises[i]);
  }
  if (!q.premises.empty()) s += " => ";
  return s + print_atom(q.conclusion);
}

// --- evaluation ---

// Uniform evaluation context for the three signatures.  arrow and star are
// always present (for product / lattice algebras they are the derived
// tables); meet and join are present only for lattice contexts.
struct EvalContext {
  int size = 0;
  Elem one = 0, zero = 0;
  const std::vector<Elem>* arrow = nullptr;  // size*size
  const std::vector<Elem>* star = nullptr;   // size
  const std::vector<Elem>* meet = nullptr;   // optional, size*size
  const std::vector<Elem>* join = nullptr;   // optional, size*size
  const std::vector<std::string>* names = nullptr;

  static EvalContext of(const InvolutiveAlgebra& a) {
    EvalContext c;
    c.size = a.size();
    c.one = a.one();
    c.zero = a.zero();
    c.arrow = &a.base.arrow;
    c.star = &a.star_table;
    c.names = &a.base.names;
    return c;
  }

  Elem imp(Elem x, Elem y) const { return (*arrow)[x * size + y]; }
  Elem st(Elem x) const { return (*star)[x]; }
};

inline Elem eval_term(const EvalContext& c, const Term& t,
                      const std::vector<Elem>& assignment,
                      const std::vector<std::string>& variables) {
  switch (t.kind) {
    case Term::Kind::Const:
      return t.const_one ? c.one : c.zero;
    case Term::Kind::Var: {
      for (std::size_t i = 0; i < variables.size(); ++i)
        if (variables[i] == t.var) return assignment[i];
      throw EvalError("undeclared variable '" + t.var + "'");
    }
    case Term::Kind::Star:
      return c.st(eval_term(c, *t.lhs, assignment, variables));
    case Term::Kind::Bin: {
      Elem l = eval_term(c, *t.lhs, assignment, variables);
      Elem r = eval_term(c, *t.rhs, assignment, variables);
      switch (t.op) {
        case BinOp::Arrow: return c.imp(l, r);
        case BinOp::Cup: return c.imp(c.imp(l, r), r);
        case BinOp::Cap: return c.st(c.imp(c.imp(c.st(l), c.st(r)), c.st(r)));
        case BinOp::Odot: return c.st(c.imp(l, c.st(r)));
        case BinOp::Oplus:  // (l* . r*)* with . expanded literally
          return c.st(c.st(c.imp(c.st(l), c.st(c.st(r)))));
        case BinOp::Meet:
          if (!c.meet) throw EvalError("meet used without a lattice context");
          return (*c.meet)[l * c.size + r];
        case BinOp::Join:
          if (!c.join) throw EvalError("join used without a lattice context");
          return (*c.join)[l * c.size + r];
      }
    }
  }
  throw EvalError("malformed term");
}

inline Elem eval_term(const InvolutiveAlgebra& a, const TermPtr& t,
                      const std::map<std::string, Elem>& assignment) {
  std::vector<std::string> vars;
  std::vector<Elem> vals;
  for (const auto& [k, v] : assignment) {
    vars.push_back(k);
    vals.push_back(v);
  }
  return eval_term(EvalContext::of(a), *t, vals, vars);
}

inline bool eval_atom(const EvalContext& c, const Atom& a,
                      const std::vector<Elem>& assignment,
                      const std::vector<std::string>& variables) {
  Elem l = eval_term(c, *a.lhs, assignment, variables);
  Elem r = eval_term(c, *a.rhs, assignment, variables);
  switch (a.rel) {
    case Rel::Eq: return l == r;
    case Rel::Leq: return c.imp(l, r) == c.one;
    case Rel::LeqQ: return l == c.st(c.imp(c.imp(c.st(l), c.st(r)), c.st(r)));
  }
  return false;
}

struct CheckResult {
  bool holds = false;
  std::optional<std::vector<Elem>> witness;  // lexicographically first falsifier
  std::uint64_t evaluations = 0;             // assignments examined
};

// Universally quantified check; scans assignments in lexicographic order
// (variables in declaration order, elements in index order) and stops at the
// first assignment whose premises hold but whose conclusion fails.
inline CheckResult check_formula(const EvalContext& c, const QuasiIdentity& q) {
  CheckResult r;
  const std::size_t k = q.variables.size();
  std::vector<Elem> assign(k, 0);
  for (;;) {
    ++r.evaluations;
    bool premises_ok = true;
    for (const Atom& p : q.premises)
      if (!eval_atom(c, p, assign, q.variables)) {
        premises_ok = false;
        break;
      }
    if (premises_ok && !eval_atom(c, q.conclusion, assign, q.variables)) {
      r.holds = false;
      r.witness = assign;
      return r;
    }
    std::size_t i = k;
    while (i > 0) {
      if (++assign[i - 1] < c.size) break;
      assign[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  r.holds = true;
  return r;
}

inline CheckResult check_formula(const InvolutiveAlgebra& a, const QuasiIdentity& q) {
  return check_formula(EvalContext::of(a), q);
}

}  // namespace belab
