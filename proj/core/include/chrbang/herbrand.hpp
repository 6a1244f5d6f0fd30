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

#ifndef CHRBANG_HERBRAND_HPP_
#define CHRBANG_HERBRAND_HPP_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chrbang/term.hpp"

namespace chrbang {

using Equation = std::pair<Term, Term>;

/// Unifies all equations (with occurs check) and returns the fully resolved,
/// idempotent most general unifier, or nothing if unsatisfiable.
///
/// Within a class of variables equated to each other, the representative is
/// the least variable by (not in `preferred`, name); all other members are
/// bound to it.
std::optional<Substitution> solve(std::span<const Equation> equations, const VarSet& preferred = {});

/// Conjunction of built-in constraints kept in solved form, or failed (⊥).
class BuiltinStore {
 public:
  BuiltinStore() = default;
  static BuiltinStore failed();
  /// Store whose solved form is `bindings`; the caller guarantees they are
  /// idempotent and occurs-check clean.
  static BuiltinStore from_solved(Substitution bindings);

  bool is_failed() const { return failed_; }
  bool is_true() const { return !failed_ && bindings_.empty(); }
  const Substitution& bindings() const { return bindings_; }
  /// Everything told so far, in order; for reporting only.
  const std::vector<BuiltinConstraint>& conjuncts() const { return conjuncts_; }

  Term resolve(const Term& t) const { return chrbang::apply(bindings_, t); }
  UserConstraint resolve(const UserConstraint& c) const { return chrbang::apply(bindings_, c); }

  VarSet variables() const;
  std::vector<Equation> equations() const;

  friend bool operator==(const BuiltinStore& a, const BuiltinStore& b) {
    return a.failed_ == b.failed_ && a.bindings_ == b.bindings_;
  }

 private:
  bool failed_ = false;
  Substitution bindings_;
  std::vector<BuiltinConstraint> conjuncts_;

  friend BuiltinStore tell(const BuiltinStore&, const BuiltinConstraint&);
  friend BuiltinStore tell_all(const BuiltinStore&, std::span<const BuiltinConstraint>);
};

/// Renders the solved form as `X = t, ...`, `true` or `fail`.
std::string to_string(const BuiltinStore& s);

BuiltinStore tell(const BuiltinStore& store, const BuiltinConstraint& c);
BuiltinStore tell_all(const BuiltinStore& store, std::span<const BuiltinConstraint> cs);

/// CT |= store -> exists locals. goal. Variables outside `locals` are rigid.
bool entails(const BuiltinStore& store, std::span<const BuiltinConstraint> goal, const VarSet& locals);

/// Like `entails`, but returns the bindings the goal forces on `locals`
/// (resolved against the store) so callers can instantiate rule bodies.
std::optional<Substitution> entailment_witness(const BuiltinStore& store, std::span<const BuiltinConstraint> goal,
                                               const VarSet& locals);

/// exists (vars(store) \ keep). store, in solved form over `keep` and free
/// variables of the retained bindings.
BuiltinStore project(const BuiltinStore& store, const VarSet& keep);

/// Mutual entailment.
bool equivalent(const BuiltinStore& a, const BuiltinStore& b);

}  // namespace chrbang

#endif  // CHRBANG_HERBRAND_HPP_
