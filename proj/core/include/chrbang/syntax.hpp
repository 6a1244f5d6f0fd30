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

#ifndef CHRBANG_SYNTAX_HPP_
#define CHRBANG_SYNTAX_HPP_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "chrbang/term.hpp"

namespace chrbang {

/// name @ prio :: kept \ removed <=> guard | body.
///
/// A rule with an empty removed head is a propagation rule and prints with
/// `==>`. Heads and bodies are multisets kept in source order.
struct Rule {
  std::optional<std::string> name;
  std::optional<int> priority;
  std::vector<UserConstraint> kept;
  std::vector<UserConstraint> removed;
  std::vector<BuiltinConstraint> guard;
  std::vector<UserConstraint> body_user;
  std::vector<BuiltinConstraint> body_builtin;

  bool is_propagation() const { return removed.empty(); }
  /// All head constraints, kept first.
  std::vector<UserConstraint> heads() const;
  VarSet head_variables() const;
  VarSet variables() const;

  friend bool operator==(const Rule&, const Rule&) = default;
};

struct Program {
  std::vector<Rule> rules;

  bool has_priorities() const;
  /// Every constraint symbol occurring in a head or body, sorted.
  std::set<Symbol> symbols() const;
  /// `name` if present, otherwise `r<index+1>`.
  std::string rule_label(std::size_t index) const;

  friend bool operator==(const Program&, const Program&) = default;
};

struct Goal {
  std::vector<UserConstraint> user;
  std::vector<BuiltinConstraint> builtin;

  VarSet variables() const;
  friend bool operator==(const Goal&, const Goal&) = default;
};

Program parse_program(std::string_view text);
Goal parse_goal(std::string_view text);

std::string to_string(const Rule& r);
std::string to_string(const Program& p);
std::string to_string(const Goal& g);

/// vars(guard, body) \ vars(heads).
VarSet local_variables(const Rule& r);

struct RangeDiagnostic {
  std::size_t rule_index;
  std::string rule;
  VarSet unbound;
  std::string message() const;
};

/// One diagnostic per rule that has local variables.
std::vector<RangeDiagnostic> check_range_restricted(const Program& p);

/// Renames every variable of `r` to a fresh name not in `avoid`; the result is
/// a variant of `r` whose variables are pairwise distinct and disjoint from
/// `avoid`.
Rule freshen(const Rule& r, const VarSet& avoid);

/// Structural equality up to a consistent bijective renaming of variables.
/// Head order is significant.
bool alpha_equivalent(const Rule& a, const Rule& b);

}  // namespace chrbang

#endif  // CHRBANG_SYNTAX_HPP_
