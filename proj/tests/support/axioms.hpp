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

#ifndef CHRBANG_TESTS_AXIOMS_HPP_
#define CHRBANG_TESTS_AXIOMS_HPP_

#include "chrbang/state.hpp"
#include "generators.hpp"

namespace chrbang::testing {

// Literal rewrites by single equivalence axioms. Each returns false when the
// axiom has no instance on the given state.

/// Equality as substitution: apply one binding of B to the user stores.
bool axiom_substitute(BangState& s, Rng& rng);
bool axiom_substitute(EState& s, Rng& rng);

/// Transformation of the built-in store: conjoin a binding of a fresh
/// strictly local variable and re-tell the conjuncts in shuffled order.
bool axiom_transform_store(BangState& s, Rng& rng);
bool axiom_transform_store(EState& s, Rng& rng);

/// Omission of a non-occurring global variable (added here).
bool axiom_add_global(BangState& s);
bool axiom_add_global(EState& s);

/// Equivalence of failed states: replace the stores of a failed state.
bool axiom_replace_failed(BangState& s, Rng& rng);
bool axiom_replace_failed(EState& s, Rng& rng);

/// Contraction: duplicate one persistent constraint.
bool axiom_contract(BangState& s, Rng& rng);

/// Renames every non-global variable of `all` to a fresh name.
Substitution local_renaming(const VarSet& all, const VarSet& globals);

}  // namespace chrbang::testing

#endif  // CHRBANG_TESTS_AXIOMS_HPP_
