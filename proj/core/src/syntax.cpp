// Copyright 2026 The chrbang Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chrbang/syntax.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "chrbang/error.hpp"

namespace chrbang {

std::vector<UserConstraint> Rule::heads() const {
  std::vector<UserConstraint> out = kept;
  out.insert(out.end(), removed.begin(), removed.end());
  return out;
}

VarSet Rule::head_variables() const {
  VarSet out = variables_of(kept);
  for (const auto& c : removed) collect_variables(c, out);
  return out;
}

VarSet Rule::variables() const {
  VarSet out = head_variables();
  for (const auto& c : guard) collect_variables(c, out);
  for (const auto& c : body_user) collect_variables(c, out);
  for (const auto& c : body_builtin) collect_variables(c, out);
  return out;
}

bool Program::has_priorities() const {
  return !rules.empty() && rules.front().priority.has_value();
}

std::set<Symbol> Program::symbols() const {
  std::set<Symbol> out;
  for (const auto& r : rules) {
    for (const auto& c : r.kept) out.insert(symbol_of(c));
    for (const auto& c : r.removed) out.insert(symbol_of(c));
    for (const auto& c : r.body_user) out.insert(symbol_of(c));
  }
  return out;
}

std::string Program::rule_label(std::size_t index) const {
  const auto& r = rules.at(index);
  return r.name ? *r.name : "r" + std::to_string(index + 1);
}

VarSet Goal::variables() const {
  VarSet out = variables_of(user);
  for (const auto& c : builtin) collect_variables(c, out);
  return out;
}

namespace {

enum class Tok {
  Ident,
  Var,
  Int,
  At,
  DoubleColon,
  Simp,
  Prop,
  Backslash,
  Bar,
  Comma,
  LParen,
  RParen,
  Equals,
  Dot,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> tokenize() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t{Tok::End, "", line_, column_};
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      char c = text_[pos_];
      if (std::islower(static_cast<unsigned char>(c))) {
        t.kind = Tok::Ident;
        t.text = word();
      } else if (std::isupper(static_cast<unsigned char>(c))) {
        t.kind = Tok::Var;
        t.text = word();
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Tok::Int;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) t.text += advance();
      } else if (starts_with("<=>")) {
        t.kind = Tok::Simp;
        t.text = take(3);
      } else if (starts_with("==>")) {
        t.kind = Tok::Prop;
        t.text = take(3);
      } else if (starts_with("::")) {
        t.kind = Tok::DoubleColon;
        t.text = take(2);
      } else {
        switch (c) {
          case '@': t.kind = Tok::At; break;
          case '\\': t.kind = Tok::Backslash; break;
          case '|': t.kind = Tok::Bar; break;
          case ',': t.kind = Tok::Comma; break;
          case '(': t.kind = Tok::LParen; break;
          case ')': t.kind = Tok::RParen; break;
          case '=': t.kind = Tok::Equals; break;
          case '.': t.kind = Tok::Dot; break;
          default:
            throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
        }
        t.text = take(1);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool starts_with(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  std::string word() {
    std::string out;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      out += advance();
    }
    return out;
  }

  std::string take(std::size_t n) {
    std::string out;
    for (std::size_t i = 0; i < n; ++i) out += advance();
    return out;
  }

  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

// An atom in a guard, body or goal position.
struct Atom {
  bool user = false;
  UserConstraint constraint;
  BuiltinConstraint builtin;
  bool trivially_true = false;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).tokenize()) {}

  Program program() {
    Program p;
    std::map<std::string, std::size_t> names;
    while (peek().kind != Tok::End) {
      const Token start = peek();
      Rule r = rule();
      if (r.name) {
        if (names.contains(*r.name)) {
          throw ParseError("duplicate rule name '" + *r.name + "'", start.line, start.column);
        }
        names.emplace(*r.name, p.rules.size());
      }
      if (!p.rules.empty() && p.rules.front().priority.has_value() != r.priority.has_value()) {
        throw ParseError("either every rule or no rule carries a priority", start.line, start.column);
      }
      p.rules.push_back(std::move(r));
    }
    return p;
  }

  Goal goal() {
    Goal g;
    if (peek().kind == Tok::End) return g;
    for (auto& a : atoms()) {
      if (a.user) {
        g.user.push_back(std::move(a.constraint));
      } else if (!a.trivially_true) {
        g.builtin.push_back(std::move(a.builtin));
      }
    }
    if (peek().kind == Tok::Dot) next();
    expect(Tok::End, "end of goal");
    return g;
  }

 private:
  Rule rule() {
    Rule r;
    if (peek().kind == Tok::Ident && peek(1).kind == Tok::At) {
      r.name = next().text;
      next();
    }
    if (peek().kind == Tok::Int && peek(1).kind == Tok::DoubleColon) {
      const Token& t = next();
      int prio = 0;
      try {
        prio = std::stoi(t.text);
      } catch (const std::exception&) {
        throw ParseError("priority out of range", t.line, t.column);
      }
      if (prio <= 0) throw ParseError("priority must be positive", t.line, t.column);
      r.priority = prio;
      next();
    }
    std::vector<UserConstraint> first = heads();
    std::vector<UserConstraint> second;
    bool split = false;
    if (peek().kind == Tok::Backslash) {
      next();
      split = true;
      second = heads();
    }
    const Token& arrow = next();
    if (arrow.kind == Tok::Simp) {
      if (split) {
        r.kept = std::move(first);
        r.removed = std::move(second);
      } else {
        r.removed = std::move(first);
      }
    } else if (arrow.kind == Tok::Prop) {
      if (split) throw ParseError("'\\' is not allowed in a propagation rule", arrow.line, arrow.column);
      r.kept = std::move(first);
    } else {
      throw ParseError("expected '<=>' or '==>'", arrow.line, arrow.column);
    }

    std::vector<Atom> list = atoms();
    if (peek().kind == Tok::Bar) {
      const Token& bar = next();
      for (auto& a : list) {
        if (a.user) throw ParseError("user-defined constraint in guard", bar.line, bar.column);
        if (!a.trivially_true) r.guard.push_back(std::move(a.builtin));
      }
      list = atoms();
    }
    for (auto& a : list) {
      if (a.user) {
        r.body_user.push_back(std::move(a.constraint));
      } else if (!a.trivially_true) {
        r.body_builtin.push_back(std::move(a.builtin));
      }
    }
    expect(Tok::Dot, "'.' at end of rule");
    return r;
  }

  std::vector<UserConstraint> heads() {
    std::vector<UserConstraint> out;
    for (;;) {
      const Token t = peek();
      Atom a = atom();
      if (!a.user) throw ParseError("head must consist of user-defined constraints", t.line, t.column);
      out.push_back(std::move(a.constraint));
      if (peek().kind != Tok::Comma) return out;
      next();
    }
  }

  std::vector<Atom> atoms() {
    std::vector<Atom> out;
    for (;;) {
      out.push_back(atom());
      if (peek().kind != Tok::Comma) return out;
      next();
    }
  }

  Atom atom() {
    const Token start = peek();
    Term lhs = term();
    Atom a;
    if (peek().kind == Tok::Equals) {
      next();
      a.builtin = BuiltinConstraint::eq(std::move(lhs), term());
      return a;
    }
    if (lhs.is_variable()) throw ParseError("a variable is not a constraint", start.line, start.column);
    if (start.kind == Tok::Int) throw ParseError("a number is not a constraint", start.line, start.column);
    if (lhs.arity() == 0 && lhs.name() == "true") {
      a.trivially_true = true;
      return a;
    }
    if (lhs.arity() == 0 && lhs.name() == "fail") {
      a.builtin = BuiltinConstraint::falsity();
      return a;
    }
    a.user = true;
    a.constraint = UserConstraint{lhs.name(), lhs.args()};
    return a;
  }

  Term term() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Var:
        return Term::variable(t.text);
      case Tok::Int:
        return Term::constant(t.text);
      case Tok::Ident: {
        std::vector<Term> args;
        if (peek().kind == Tok::LParen) {
          next();
          for (;;) {
            args.push_back(term());
            if (peek().kind == Tok::Comma) {
              next();
              continue;
            }
            expect(Tok::RParen, "')'");
            break;
          }
        }
        return Term::compound(t.text, std::move(args));
      }
      default:
        throw ParseError("expected a term, found '" + t.text + "'", t.line, t.column);
    }
  }

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }

  const Token& next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  void expect(Tok kind, const char* what) {
    const Token& t = peek();
    if (t.kind != kind) {
      throw ParseError(std::string("expected ") + what + ", found '" + (t.kind == Tok::End ? "<end>" : t.text) + "'",
                       t.line, t.column);
    }
    next();
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Program parse_program(std::string_view text) { return Parser(text).program(); }

Goal parse_goal(std::string_view text) { return Parser(text).goal(); }

std::string to_string(const Rule& r) {
  std::ostringstream os;
  if (r.name) os << *r.name << " @ ";
  if (r.priority) os << *r.priority << " :: ";
  if (r.removed.empty()) {
    os << join(r.kept, ", ") << " ==> ";
  } else if (r.kept.empty()) {
    os << join(r.removed, ", ") << " <=> ";
  } else {
    os << join(r.kept, ", ") << " \\ " << join(r.removed, ", ") << " <=> ";
  }
  if (!r.guard.empty()) os << join(r.guard, ", ") << " | ";
  std::string body = join(r.body_user, ", ");
  std::string builtins = join(r.body_builtin, ", ");
  if (!body.empty() && !builtins.empty()) body += ", ";
  body += builtins;
  os << (body.empty() ? "true" : body) << '.';
  return os.str();
}

std::string to_string(const Program& p) {
  std::string out;
  for (const auto& r : p.rules) out += to_string(r) + "\n";
  return out;
}

std::string to_string(const Goal& g) {
  std::string out = join(g.user, ", ");
  std::string builtins = join(g.builtin, ", ");
  if (!out.empty() && !builtins.empty()) out += ", ";
  return out + builtins;
}

VarSet local_variables(const Rule& r) {
  VarSet head = r.head_variables();
  VarSet rest;
  for (const auto& c : r.guard) collect_variables(c, rest);
  for (const auto& c : r.body_user) collect_variables(c, rest);
  for (const auto& c : r.body_builtin) collect_variables(c, rest);
  VarSet out;
  for (const auto& v : rest) {
    if (!head.contains(v)) out.insert(v);
  }
  return out;
}

std::string RangeDiagnostic::message() const {
  std::string vars;
  for (const auto& v : unbound) vars += (vars.empty() ? "" : ", ") + v;
  return "rule '" + rule + "' is not range-restricted: " + vars + " do(es) not occur in the head";
}

std::vector<RangeDiagnostic> check_range_restricted(const Program& p) {
  std::vector<RangeDiagnostic> out;
  for (std::size_t i = 0; i < p.rules.size(); ++i) {
    VarSet locals = local_variables(p.rules[i]);
    if (!locals.empty()) out.push_back({i, p.rule_label(i), std::move(locals)});
  }
  return out;
}

namespace {

std::string base_name(const std::string& v) {
  auto pos = v.rfind('_');
  if (pos == std::string::npos || pos + 1 == v.size()) return v;
  for (std::size_t i = pos + 1; i < v.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(v[i]))) return v;
  }
  return v.substr(0, pos);
}

Rule rename(const Rule& r, const Substitution& s) {
  Rule out = r;
  for (auto& c : out.kept) c = chrbang::apply(s, c);
  for (auto& c : out.removed) c = chrbang::apply(s, c);
  for (auto& c : out.guard) c = chrbang::apply(s, c);
  for (auto& c : out.body_user) c = chrbang::apply(s, c);
  for (auto& c : out.body_builtin) c = chrbang::apply(s, c);
  return out;
}

}  // namespace

Rule freshen(const Rule& r, const VarSet& avoid) {
  Substitution s;
  VarSet used;
  for (const auto& v : r.variables()) {
    std::string name = v;
    if (avoid.contains(name) || used.contains(name)) {
      const std::string base = base_name(v);
      for (std::size_t k = 1;; ++k) {
        name = base + "_" + std::to_string(k);
        if (!avoid.contains(name) && !used.contains(name)) break;
      }
    }
    used.insert(name);
    if (name != v) s.emplace(v, Term::variable(name));
  }
  return s.empty() ? r : rename(r, s);
}

namespace {

class AlphaMatcher {
 public:
  bool term(const Term& a, const Term& b) {
    if (a.is_variable() != b.is_variable()) return false;
    if (a.is_variable()) {
      auto [ia, fresh_a] = forward_.emplace(a.name(), b.name());
      auto [ib, fresh_b] = backward_.emplace(b.name(), a.name());
      return ia->second == b.name() && ib->second == a.name();
    }
    if (a.name() != b.name() || a.arity() != b.arity()) return false;
    for (std::size_t i = 0; i < a.arity(); ++i) {
      if (!term(a.args()[i], b.args()[i])) return false;
    }
    return true;
  }

  bool constraints(const std::vector<UserConstraint>& a, const std::vector<UserConstraint>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].functor != b[i].functor || a[i].arity() != b[i].arity()) return false;
      for (std::size_t j = 0; j < a[i].arity(); ++j) {
        if (!term(a[i].args[j], b[i].args[j])) return false;
      }
    }
    return true;
  }

  bool builtins(const std::vector<BuiltinConstraint>& a, const std::vector<BuiltinConstraint>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].kind != b[i].kind) return false;
      if (a[i].is_eq() && !(term(a[i].lhs, b[i].lhs) && term(a[i].rhs, b[i].rhs))) return false;
    }
    return true;
  }

 private:
  std::map<std::string, std::string> forward_;
  std::map<std::string, std::string> backward_;
};

}  // namespace

bool alpha_equivalent(const Rule& a, const Rule& b) {
  if (a.priority != b.priority) return false;
  AlphaMatcher m;
  return m.constraints(a.kept, b.kept) && m.constraints(a.removed, b.removed) && m.builtins(a.guard, b.guard) &&
         m.constraints(a.body_user, b.body_user) && m.builtins(a.body_builtin, b.body_builtin);
}

}  // namespace chrbang
