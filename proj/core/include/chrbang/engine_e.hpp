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

#ifndef CHRBANG_ENGINE_E_HPP_
#define CHRBANG_ENGINE_E_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "chrbang/state.hpp"
#include "chrbang/syntax.hpp"

namespace chrbang {

/// Bounded exploration of the equivalence-based transition relation. That
/// relation does not terminate on propagation rules, so every exploration
/// takes an explicit budget.
struct ExploreBudget {
  std::size_t depth = 0;
  std::size_t max_states = 10'000;
};

EState init_e_state(const Goal& goal);

/// Successor classes of `s` in one transition, duplicates collapsed.
std::vector<NormalForm> successors_e(const EState& s, const Program& p);

struct Reachability {
  /// Every visited class, in BFS order.
  std::vector<NormalForm> states;
  /// Visited count after finishing each depth 0..reached.
  std::vector<std::size_t> per_depth;
  /// Classes first discovered at the final depth still have successors.
  bool frontier_open = false;
  /// Stopped at `max_states`.
  bool truncated = false;
};

Reachability reachable(const EState& s, const Program& p, const ExploreBudget& budget);

struct SearchOutcome {
  std::optional<NormalForm> found;
  std::size_t explored = 0;
  bool exhausted_budget = false;
  /// Some class at the depth bound was left unexpanded.
  bool depth_limited = false;
};

/// Best-first search for a reachable class satisfying `goal`. `score`
/// orders the frontier (lower first); classes deeper than `budget.depth` are
/// not expanded and at most `budget.max_states` classes are visited.
SearchOutcome search_e(const EState& s, const Program& p, const ExploreBudget& budget,
                       const std::function<bool(const NormalForm&)>& goal,
                       const std::function<std::size_t(const NormalForm&)>& score);

}  // namespace chrbang

#endif  // CHRBANG_ENGINE_E_HPP_
