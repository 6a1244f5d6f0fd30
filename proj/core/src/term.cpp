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

#include "chrbang/term.hpp"

#include <sstream>

namespace chrbang {

Term Term::variable(std::string name) { return Term(true, std::move(name), {}); }

Term Term::compound(std::string functor, std::vector<Term> args) {
  return Term(false, std::move(functor), std::move(args));
}

bool Term::is_ground() const {
  if (variable_) return false;
  for (const auto& a : args_) {
    if (!a.is_ground()) return false;
  }
  return true;
}

void Term::collect_variables(VarSet& out) const {
  if (variable_) {
    out.insert(name_);
    return;
  }
  for (const auto& a : args_) a.collect_variables(out);
}

bool Term::occurs(const std::string& var) const {
  if (variable_) return name_ == var;
  for (const auto& a : args_) {
    if (a.occurs(var)) return true;
  }
  return false;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.variable_ != b.variable_) return a.variable_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = a.name_ <=> b.name_; c != 0) return c;
  if (auto c = a.args_.size() <=> b.args_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.args_.size(); ++i) {
    if (auto c = a.args_[i] <=> b.args_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
  os << t.name();
  if (!t.is_variable() && t.arity() > 0) {
    os << '(';
    for (std::size_t i = 0; i < t.arity(); ++i) {
      if (i) os << ',';
      os << t.args()[i];
    }
    os << ')';
  }
  return os;
}

std::string to_string(const Term& t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

Term apply(const Substitution& s, const Term& t) {
  if (s.empty()) return t;
  if (t.is_variable()) {
    auto it = s.find(t.name());
    return it == s.end() ? t : it->second;
  }
  if (t.arity() == 0) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) args.push_back(chrbang::apply(s, a));
  return Term::compound(t.name(), std::move(args));
}

Term resolve(const Substitution& s, const Term& t) {
  if (s.empty()) return t;
  if (t.is_variable()) {
    auto it = s.find(t.name());
    return it == s.end() ? t : resolve(s, it->second);
  }
  if (t.arity() == 0) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) args.push_back(resolve(s, a));
  return Term::compound(t.name(), std::move(args));
}

std::strong_ordering operator<=>(const UserConstraint& a, const UserConstraint& b) {
  if (auto c = a.functor <=> b.functor; c != 0) return c;
  if (auto c = a.args.size() <=> b.args.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (auto c = a.args[i] <=> b.args[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const UserConstraint& c) {
  os << c.functor;
  if (!c.args.empty()) {
    os << '(';
    for (std::size_t i = 0; i < c.args.size(); ++i) {
      if (i) os << ',';
      os << c.args[i];
    }
    os << ')';
  }
  return os;
}

std::string to_string(const UserConstraint& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

UserConstraint apply(const Substitution& s, const UserConstraint& c) {
  UserConstraint out{c.functor, {}};
  out.args.reserve(c.args.size());
  for (const auto& a : c.args) out.args.push_back(chrbang::apply(s, a));
  return out;
}

void collect_variables(const UserConstraint& c, VarSet& out) {
  for (const auto& a : c.args) a.collect_variables(out);
}

std::ostream& operator<<(std::ostream& os, const Symbol& s) { return os << s.functor << '/' << s.arity; }

std::ostream& operator<<(std::ostream& os, const BuiltinConstraint& c) {
  switch (c.kind) {
    case BuiltinConstraint::Kind::True:
      return os << "true";
    case BuiltinConstraint::Kind::False:
      return os << "fail";
    case BuiltinConstraint::Kind::Eq:
      return os << c.lhs << " = " << c.rhs;
  }
  return os;
}

std::string to_string(const BuiltinConstraint& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

BuiltinConstraint apply(const Substitution& s, const BuiltinConstraint& c) {
  if (!c.is_eq()) return c;
  return BuiltinConstraint::eq(chrbang::apply(s, c.lhs), chrbang::apply(s, c.rhs));
}

void collect_variables(const BuiltinConstraint& c, VarSet& out) {
  if (!c.is_eq()) return;
  c.lhs.collect_variables(out);
  c.rhs.collect_variables(out);
}

VarSet variables_of(std::span<const UserConstraint> cs) {
  VarSet out;
  for (const auto& c : cs) collect_variables(c, out);
  return out;
}

VarSet variables_of(std::span<const BuiltinConstraint> cs) {
  VarSet out;
  for (const auto& c : cs) collect_variables(c, out);
  return out;
}

}  // namespace chrbang
