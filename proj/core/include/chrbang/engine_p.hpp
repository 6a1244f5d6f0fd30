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

#ifndef CHRBANG_ENGINE_P_HPP_
#define CHRBANG_ENGINE_P_HPP_

#include <compare>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "chrbang/engine_bang.hpp"
#include "chrbang/herbrand.hpp"
#include "chrbang/syntax.hpp"

namespace chrbang {

/// c#i
struct IdentifiedConstraint {
  UserConstraint constraint;
  std::size_t id = 0;
  friend bool operator==(const IdentifiedConstraint&, const IdentifiedConstraint&) = default;
};

/// Propagation-history entry: rule and the ids matched by its kept then
/// removed heads, in head order.
struct Token {
  std::size_t rule = 0;
  std::vector<std::size_t> ids;
  friend auto operator<=>(const Token&, const Token&) = default;
};

using GoalItem = std::variant<UserConstraint, BuiltinConstraint>;

/// <G ; S ; B ; T ; n ; V>
struct PState {
  std::deque<GoalItem> goal;
  std::vector<IdentifiedConstraint> store;
  BuiltinStore builtins;
  std::set<Token> tokens;
  std::size_t next_id = 0;
  VarSet globals;
};

enum class PTransition { Solve, Introduce, Apply };

const char* to_string(PTransition t);

struct PStepInfo {
  PTransition kind = PTransition::Solve;
  std::size_t rule = 0;
  int priority = 0;
  std::vector<std::size_t> ids;
};

/// A firable rule instance in the current store.
struct PInstance {
  std::size_t rule = 0;
  int priority = 0;
  Token token;
  Substitution theta;
  Rule variant;
};

/// Goal items are the user constraints followed by the built-ins.
PState init_p_state(const Goal& goal);

/// Every instance with an entailed guard and an unused token, ordered by
/// priority, rule order, then id sequence.
std::vector<PInstance> applicable_instances(const PState& s, const Program& p);

/// Solve or Introduce on the front goal item; otherwise Apply the
/// highest-priority instance. Throws Error if `p` carries no priorities.
std::optional<std::pair<PState, PStepInfo>> step_p(const PState& s, const Program& p);

struct PRun {
  PState final_state;
  std::size_t steps = 0;
  Verdict verdict = Verdict::Quiescent;
  /// One line per transition when tracing was requested.
  std::vector<std::string> trace;
};

PRun run_p(const PState& initial, const Program& p, std::size_t max_steps, bool trace = false);

/// `<G ; S ; B ; T ; n ; V>`
std::string to_string(const PState& s, const Program& p);

}  // namespace chrbang

#endif  // CHRBANG_ENGINE_P_HPP_
