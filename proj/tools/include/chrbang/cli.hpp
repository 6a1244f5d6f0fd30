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

#ifndef CHRBANG_CLI_HPP_
#define CHRBANG_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>

#include "chrbang/engine_bang.hpp"
#include "chrbang/syntax.hpp"

namespace chrbang::cli {

enum class CompareVerdict { Pass, Fail, Inconclusive };
const char* to_string(CompareVerdict v);

struct CompareReport {
  CompareVerdict verdict = CompareVerdict::Inconclusive;
  Verdict bang_verdict = Verdict::Quiescent;
  Verdict p_verdict = Verdict::Quiescent;
  std::size_t bang_transitions = 0;
  std::size_t p_transitions = 0;
  /// Normal form of the persistent-semantics final state.
  std::string bang_state;
  /// Normal form of the decoded priority-semantics final state.
  std::string decoded_state;
  /// Set when the decoded state only matched another quiescent derivation.
  bool matched_alternative = false;
  std::string detail;
};

struct CompareOptions {
  std::size_t max_steps = 10'000;
  std::uint64_t seed = 0;
  /// Cap on states visited when searching alternative derivations.
  std::size_t max_states = 20'000;
};

/// Runs `p` under the persistent semantics and its encoding under the
/// priority semantics, then checks that the decoded store is equivalent to a
/// quiescent persistent-semantics state reachable from `goal`.
CompareReport compare_semantics(const Program& p, const Goal& goal, const CompareOptions& opts = {});

/// Entry point of the `chrbang` tool. Exit codes: run 0 quiescent, 2 limit
/// reached; compare 0 PASS, 2 INCONCLUSIVE, 3 FAIL; 1 on any error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chrbang::cli

#endif  // CHRBANG_CLI_HPP_
