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

#ifndef CHRBANG_TESTS_ORACLES_HPP_
#define CHRBANG_TESTS_ORACLES_HPP_

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "chrbang/state.hpp"
#include "chrbang/term.hpp"

namespace chrbang::testing {

using Edge = std::pair<std::size_t, std::size_t>;
using EdgeSet = std::set<Edge>;

/// R+ by Floyd-Warshall over a boolean adjacency matrix.
EdgeSet transitive_closure(std::size_t nodes, const EdgeSet& edges);

/// Entailment by enumeration: every assignment of the variables to ground
/// terms from a finite pool (a, b, one fresh constant per variable, nested
/// under f up to the variable count) that satisfies `store` satisfies
/// `goal` for some assignment of `locals`. Exact for equations whose terms
/// nest f at most once; without f the pool is the constants alone.
bool brute_entails(const std::vector<BuiltinConstraint>& store, const std::vector<BuiltinConstraint>& goal,
                   const VarSet& locals = {});

/// Some pool assignment satisfies `store`.
bool brute_satisfiable(const std::vector<BuiltinConstraint>& store);

/// Equivalence of ground states with trivial built-ins: same linear multiset
/// and same persistent set.
bool ground_bang_equivalent(const BangState& a, const BangState& b);

/// Multiset inclusion.
bool multiset_includes(std::vector<UserConstraint> big, std::vector<UserConstraint> small);

}  // namespace chrbang::testing

#endif  // CHRBANG_TESTS_ORACLES_HPP_
