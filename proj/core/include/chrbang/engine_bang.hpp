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

#ifndef CHRBANG_ENGINE_BANG_HPP_
#define CHRBANG_ENGINE_BANG_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chrbang/state.hpp"
#include "chrbang/syntax.hpp"

namespace chrbang {

enum class ApplyMode { Linear, Persistent };

const char* to_string(ApplyMode m);

/// Where a head occurrence was matched.
struct HeadSource {
  bool persistent = false;
  std::size_t index = 0;
  friend bool operator==(const HeadSource&, const HeadSource&) = default;
};

struct Matching {
  std::size_t rule_index = 0;
  /// The freshened variant the matching refers to.
  Rule rule;
  std::vector<HeadSource> kept;
  std::vector<HeadSource> removed;
  /// Binds the variant's variables to (resolved) store terms.
  Substitution theta;
  ApplyMode mode = ApplyMode::Persistent;
};

struct BangOptions {
  /// 0 keeps the canonical candidate order; any other value shuffles it
  /// reproducibly.
  std::uint64_t seed = 0;
  /// Let several persistent head positions match the same persistent
  /// constraint (sound by Contraction).
  bool collapse_persistent = true;
};

struct TraceEntry {
  std::size_t index = 0;
  std::string rule;
  ApplyMode mode = ApplyMode::Persistent;
  std::uint64_t pre_digest = 0;
  std::uint64_t post_digest = 0;
  NormalForm post;

  /// `#k <mode> <rule> :: <post-state>`
  std::string str() const;
};

struct Trace {
  std::vector<TraceEntry> steps;
};

enum class Verdict { Quiescent, StepLimit };

const char* to_string(Verdict v);

/// <goal ; {} ; goal built-ins ; vars(goal)>
BangState init_state(const Goal& goal);

/// Every head assignment whose guard is entailed, in rule order, then
/// persistent-first per head position, then ascending store index.
std::vector<Matching> candidate_matchings(const BangState& s, const Program& p, const BangOptions& opts = {});

/// ApplyLinear or ApplyPersistent; nothing when the result is equivalent to
/// `s` (the transition system is irreflexive).
std::optional<BangState> apply(const BangState& s, const Matching& m);

struct BangStep {
  BangState state;
  TraceEntry entry;
};

std::optional<BangStep> step(const BangState& s, const Program& p, const BangOptions& opts = {},
                             std::size_t step_index = 1);

/// All accepted transitions out of `s`.
std::vector<BangStep> successors(const BangState& s, const Program& p, const BangOptions& opts = {});

struct BangRun {
  BangState final_state;
  Trace trace;
  Verdict verdict = Verdict::Quiescent;
  std::size_t transitions() const { return trace.steps.size(); }
};

/// Throws NotRangeRestricted for programs with local variables.
BangRun run(const Goal& goal, const Program& p, std::size_t max_steps, const BangOptions& opts = {});
BangRun run_from(const BangState& initial, const Program& p, std::size_t max_steps, const BangOptions& opts = {});

/// Every variable occurring anywhere in `s`, including globals.
VarSet state_variables(const BangState& s);

}  // namespace chrbang

#endif  // CHRBANG_ENGINE_BANG_HPP_
