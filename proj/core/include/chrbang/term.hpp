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

#ifndef CHRBANG_TERM_HPP_
#define CHRBANG_TERM_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace chrbang {

using VarSet = std::set<std::string>;

/// A first-order Herbrand term: a variable or a compound f(t1, ..., tn).
/// Constants are compounds of arity zero.
class Term {
 public:
  static Term variable(std::string name);
  static Term compound(std::string functor, std::vector<Term> args = {});
  static Term constant(std::string name) { return compound(std::move(name)); }

  bool is_variable() const { return variable_; }
  /// Variable name, or functor for compounds.
  const std::string& name() const { return name_; }
  const std::vector<Term>& args() const { return args_; }
  std::size_t arity() const { return args_.size(); }
  bool is_ground() const;

  void collect_variables(VarSet& out) const;
  bool occurs(const std::string& var) const;

  friend bool operator==(const Term&, const Term&) = default;
  // Variables before compounds; compounds by functor, arity, then arguments.
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  Term(bool variable, std::string name, std::vector<Term> args)
      : variable_(variable), name_(std::move(name)), args_(std::move(args)) {}

  bool variable_ = false;
  std::string name_;
  std::vector<Term> args_;
};

std::ostream& operator<<(std::ostream& os, const Term& t);
std::string to_string(const Term& t);

/// Idempotent or triangular variable bindings. `apply` performs a single
/// pass; `resolve` chases chains.
using Substitution = std::map<std::string, Term>;

Term apply(const Substitution& s, const Term& t);
Term resolve(const Substitution& s, const Term& t);

/// A CHR constraint c(t1, ..., tn); c/n identifies the symbol.
struct UserConstraint {
  std::string functor;
  std::vector<Term> args;

  std::size_t arity() const { return args.size(); }
  friend bool operator==(const UserConstraint&, const UserConstraint&) = default;
  friend std::strong_ordering operator<=>(const UserConstraint& a, const UserConstraint& b);
};

std::ostream& operator<<(std::ostream& os, const UserConstraint& c);
std::string to_string(const UserConstraint& c);
UserConstraint apply(const Substitution& s, const UserConstraint& c);
void collect_variables(const UserConstraint& c, VarSet& out);

struct Symbol {
  std::string functor;
  std::size_t arity = 0;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

inline Symbol symbol_of(const UserConstraint& c) { return {c.functor, c.arity()}; }
std::ostream& operator<<(std::ostream& os, const Symbol& s);

/// Built-in constraints over the Herbrand theory: syntactic equality, true and
/// fail.
struct BuiltinConstraint {
  enum class Kind { Eq, True, False };

  Kind kind = Kind::True;
  Term lhs = Term::constant("true");
  Term rhs = Term::constant("true");

  static BuiltinConstraint eq(Term l, Term r) { return {Kind::Eq, std::move(l), std::move(r)}; }
  static BuiltinConstraint truth() { return {}; }
  static BuiltinConstraint falsity() { return {Kind::False, Term::constant("fail"), Term::constant("fail")}; }

  bool is_eq() const { return kind == Kind::Eq; }
  friend bool operator==(const BuiltinConstraint&, const BuiltinConstraint&) = default;
};

std::ostream& operator<<(std::ostream& os, const BuiltinConstraint& c);
std::string to_string(const BuiltinConstraint& c);
BuiltinConstraint apply(const Substitution& s, const BuiltinConstraint& c);
void collect_variables(const BuiltinConstraint& c, VarSet& out);

VarSet variables_of(std::span<const UserConstraint> cs);
VarSet variables_of(std::span<const BuiltinConstraint> cs);

/// Renders `items` separated by `sep`, or `empty` if there are none.
template <typename Range>
std::string join(const Range& items, const std::string& sep, const std::string& empty = "") {
  std::string out;
  bool first = true;
  for (const auto& item : items) {
    if (!first) out += sep;
    out += to_string(item);
    first = false;
  }
  return first ? empty : out;
}

}  // namespace chrbang

#endif  // CHRBANG_TERM_HPP_
