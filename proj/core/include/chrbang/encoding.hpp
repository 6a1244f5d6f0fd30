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

#ifndef CHRBANG_ENCODING_HPP_
#define CHRBANG_ENCODING_HPP_

#include <string>
#include <vector>

#include "chrbang/engine_p.hpp"
#include "chrbang/syntax.hpp"

namespace chrbang {

/// Distinguished first argument of every encoded constraint.
enum class ModeTag { Linear, Persistent, Candidate };

/// The atom used for a tag: `l`, `p` or `c`.
const char* tag_name(ModeTag t);

/// c(t1..tn) -> c(tag, t1..tn)
UserConstraint tagged(const UserConstraint& c, ModeTag t);

/// <H2 ; G ; {}> equivalent to <Bc ; Bb ; {}>.
bool is_trivially_pathological(const Rule& r);

/// Heuristic for the general case: tests the guard as the existential store,
/// <H2 ; G ; {}> against <Bc ; G /\ Bb ; {}>. A hit is a warning only.
bool is_suspected_pathological(const Rule& r);

struct EncodingStats {
  std::size_t apply_linear = 0;
  std::size_t apply_persistent = 0;
  std::size_t collapsed = 0;
  std::size_t bookkeeping = 0;
};

struct EncodedProgram {
  Program program;
  std::vector<std::string> warnings;
  EncodingStats stats;
};

/// Translates a program for the persistent semantics into a priority program
/// over tagged constraints:
///
///  - priority 3, one rule per l/p split of the heads with at least one linear
///    removed head: kept linear and all persistent heads stay, linear removed
///    heads go, body constraints are added linear;
///  - priority 3, one propagation rule per l/p split of the kept head with the
///    removed head persistent, body constraints added as candidates;
///  - closure under merging two persistent heads of the same symbol into one,
///    equating their arguments in the guard (both orientations, alpha-equal
///    duplicates dropped);
///  - per symbol c/n: `1 :: c(p,T) \ c(c,T) <=> true` and
///    `2 :: c(c,T) <=> c(p,T)`.
///
/// Throws NotRangeRestricted or TriviallyPathological.
EncodedProgram encode_program(const Program& p);

/// <l(goal), builtins ; {} ; true ; {} ; 0 ; vars(goal)>
PState encode_goal(const Goal& goal);

struct DecodedStore {
  std::vector<UserConstraint> linear;
  std::vector<UserConstraint> persistent;
};

/// Strips tags. Throws ResidualCandidateConstraint on a `c`-tagged constraint
/// and Error on an untagged one.
DecodedStore decode_store(const std::vector<IdentifiedConstraint>& store);

}  // namespace chrbang

#endif  // CHRBANG_ENCODING_HPP_
