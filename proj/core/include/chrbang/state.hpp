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

#ifndef CHRBANG_STATE_HPP_
#define CHRBANG_STATE_HPP_

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chrbang/herbrand.hpp"
#include "chrbang/term.hpp"

namespace chrbang {

/// <G ; B ; V> of the equivalence-based semantics.
struct EState {
  std::vector<UserConstraint> store;
  BuiltinStore builtins;
  VarSet globals;
};

/// <L ; P ; B ; V>: linear store, persistent store, built-ins, globals.
struct BangState {
  std::vector<UserConstraint> linear;
  std::vector<UserConstraint> persistent;
  BuiltinStore builtins;
  VarSet globals;
};

/// Canonical representative of a state's equivalence class.
///
/// The built-in substitution is applied to the user stores, bindings are
/// projected onto globals, non-occurring globals are dropped and the remaining
/// local variables are renamed `_0`, `_1`, ... in order of first occurrence.
/// Stores are sorted. Two states are equivalent iff their normal forms are
/// equal up to a bijection between local variables; `equivalent` performs that
/// residual search. Failed states all normalize to FAILED; `globals` on a
/// failed form is informational and ignored by comparison.
struct NormalForm {
  bool failed = false;
  std::vector<UserConstraint> linear;
  std::vector<UserConstraint> persistent;
  /// Sorted by variable; keys are always globals.
  std::vector<std::pair<std::string, Term>> bindings;
  VarSet globals;
  std::size_t local_count = 0;

  /// Stable debug form: `<{L} ; {P} ; B ; {V}>`, or `<{G} ; B ; {V}>` for
  /// states of the equivalence-based semantics (single store), or
  /// `FAILED({V})`.
  std::string str(bool single_store = false) const;
  /// Text with every local variable printed as `_`; equal for equivalent
  /// states, so it serves as a hash key.
  std::string shape() const;

  friend bool operator==(const NormalForm& a, const NormalForm& b);
};

NormalForm normalize_bang(const BangState& s);
NormalForm normalize_e(const EState& s);

/// Equality up to renaming of local variables.
bool equivalent(const NormalForm& a, const NormalForm& b);

bool equiv_bang(const BangState& a, const BangState& b);
bool equiv_e(const EState& a, const EState& b);

/// A state whose normalization is `nf` again.
BangState as_bang_state(const NormalForm& nf);
EState as_e_state(const NormalForm& nf);

/// Renders `<{L} ; {P} ; B ; {V}>` with stores in their current order.
std::string to_string(const BangState& s);
std::string to_string(const EState& s);

/// FNV-1a of the canonical text; stable across runs and platforms.
std::uint64_t digest(const NormalForm& nf);

/// Local variables of normal forms are exactly the names starting with '_'.
inline bool is_local_name(const std::string& v) { return !v.empty() && v.front() == '_'; }

/// How a pattern constraint may be mapped into a target store.
struct MatchPool {
  const std::vector<UserConstraint>* items = nullptr;
  /// Every target element used at most once.
  bool distinct = true;
  /// Every target element must be used.
  bool cover = false;
};

struct MatchTask {
  const UserConstraint* constraint = nullptr;
  /// Indices into the pool list this constraint may map into.
  std::vector<std::size_t> pools;
};

/// Backtracking search for an injective renaming of pattern local variables
/// onto target local variables under which every task maps onto an element of
/// one of its pools, pool constraints hold and the binding lists agree.
/// Globals must match literally.
bool match_modulo_locals(const std::vector<MatchTask>& tasks, const std::vector<MatchPool>& pools,
                         const std::vector<std::pair<std::string, Term>>& pattern_bindings,
                         const std::vector<std::pair<std::string, Term>>& target_bindings);

/// Visited set of equivalence classes: shape-keyed buckets with a residual
/// equivalence check.
class NormalFormSet {
 public:
  /// Returns false if an equivalent form is already present.
  bool insert(const NormalForm& nf);
  bool contains(const NormalForm& nf) const;
  std::size_t size() const { return size_; }

 private:
  std::unordered_map<std::string, std::vector<NormalForm>> buckets_;
  std::size_t size_ = 0;
};

}  // namespace chrbang

#endif  // CHRBANG_STATE_HPP_
