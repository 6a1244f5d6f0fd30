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

#include "chrbang/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "chrbang/encoding.hpp"
#include "chrbang/engine_e.hpp"
#include "chrbang/engine_p.hpp"
#include "chrbang/error.hpp"

namespace chrbang::cli {

const char* to_string(CompareVerdict v) {
  switch (v) {
    case CompareVerdict::Pass:
      return "PASS";
    case CompareVerdict::Fail:
      return "FAIL";
    case CompareVerdict::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitLimit = 2;
constexpr int kExitFail = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Program load_program(const std::string& path) {
  try {
    return parse_program(read_file(path));
  } catch (const ParseError& e) {
    throw Error(path + ":" + e.what());
  }
}

enum class Search { Found, Exhausted, Truncated };

// Depth-first search over all derivations from `start` for a quiescent state
// equivalent to `target`.
Search find_quiescent(const BangState& start, const Program& p, const NormalForm& target, std::size_t max_states) {
  NormalFormSet seen;
  std::vector<BangState> stack{start};
  seen.insert(normalize_bang(start));
  while (!stack.empty()) {
    BangState s = std::move(stack.back());
    stack.pop_back();
    auto next = successors(s, p);
    if (next.empty()) {
      if (equivalent(normalize_bang(s), target)) return Search::Found;
      continue;
    }
    for (auto& n : next) {
      if (!seen.insert(n.entry.post)) continue;
      if (seen.size() > max_states) return Search::Truncated;
      stack.push_back(std::move(n.state));
    }
  }
  return Search::Exhausted;
}

struct RunArgs {
  std::string program;
  std::string goal;
  std::string semantics = "bang";
  std::size_t max_steps = 10'000;
  bool trace = false;
  std::uint64_t seed = 0;
  std::size_t depth = 0;
  std::size_t max_states = 10'000;
};

int cmd_run(const RunArgs& a, std::ostream& out) {
  const Program p = load_program(a.program);
  const Goal g = parse_goal(a.goal);
  if (a.semantics == "bang") {
    const BangRun r = run(g, p, a.max_steps, BangOptions{a.seed, true});
    if (a.trace) {
      out << "#0 init :: " << normalize_bang(init_state(g)).str() << '\n';
      for (const auto& e : r.trace.steps) out << e.str() << '\n';
    }
    out << "verdict: " << to_string(r.verdict) << '\n';
    out << "transitions: " << r.transitions() << '\n';
    out << "state: " << normalize_bang(r.final_state).str() << '\n';
    return r.verdict == Verdict::Quiescent ? kExitOk : kExitLimit;
  }
  if (a.semantics == "p") {
    const PRun r = run_p(init_p_state(g), p, a.max_steps, a.trace);
    for (const auto& line : r.trace) out << line << '\n';
    out << "verdict: " << to_string(r.verdict) << '\n';
    out << "transitions: " << r.steps << '\n';
    out << "state: " << to_string(r.final_state, p) << '\n';
    return r.verdict == Verdict::Quiescent ? kExitOk : kExitLimit;
  }
  if (a.depth == 0) throw Error("--semantics e requires --depth");
  const Reachability r = reachable(init_e_state(g), p, ExploreBudget{a.depth, a.max_states});
  for (std::size_t d = 0; d < r.per_depth.size(); ++d) out << "depth " << d << ": " << r.per_depth[d] << '\n';
  if (a.trace) {
    for (const auto& nf : r.states) out << nf.str(true) << '\n';
  }
  out << "reachable: " << r.states.size() << '\n';
  if (r.truncated) {
    out << "verdict: state-limit\n";
    return kExitLimit;
  }
  if (r.frontier_open) {
    out << "verdict: depth-limit\n";
    return kExitLimit;
  }
  out << "verdict: quiescent\n";
  return kExitOk;
}

int cmd_encode(const std::string& program, const std::string& output, std::ostream& out, std::ostream& err) {
  const EncodedProgram e = encode_program(load_program(program));
  for (const auto& w : e.warnings) err << "warning: " << w << '\n';
  const std::string text = to_string(e.program);
  if (output.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream f(output, std::ios::binary);
  if (!f) throw Error("cannot write '" + output + "'");
  f << text;
  return kExitOk;
}

int cmd_compare(const std::string& program, const std::string& goal, const CompareOptions& opts, std::ostream& out) {
  const CompareReport r = compare_semantics(load_program(program), parse_goal(goal), opts);
  out << "bang: " << to_string(r.bang_verdict) << ", " << r.bang_transitions << " transitions\n";
  out << "p: " << to_string(r.p_verdict) << ", " << r.p_transitions << " transitions\n";
  if (!r.bang_state.empty()) out << "bang state: " << r.bang_state << '\n';
  if (!r.decoded_state.empty()) out << "decoded state: " << r.decoded_state << '\n';
  if (!r.detail.empty()) out << "note: " << r.detail << '\n';
  out << "verdict: " << to_string(r.verdict) << '\n';
  switch (r.verdict) {
    case CompareVerdict::Pass:
      return kExitOk;
    case CompareVerdict::Inconclusive:
      return kExitLimit;
    case CompareVerdict::Fail:
      return kExitFail;
  }
  return kExitError;
}

}  // namespace

CompareReport compare_semantics(const Program& p, const Goal& goal, const CompareOptions& opts) {
  CompareReport report;
  const BangRun bang = run(goal, p, opts.max_steps, BangOptions{opts.seed, true});
  report.bang_verdict = bang.verdict;
  report.bang_transitions = bang.transitions();
  report.bang_state = normalize_bang(bang.final_state).str();

  const EncodedProgram encoded = encode_program(p);
  const PRun prun = run_p(encode_goal(goal), encoded.program, opts.max_steps);
  report.p_verdict = prun.verdict;
  report.p_transitions = prun.steps;

  if (bang.verdict != Verdict::Quiescent || prun.verdict != Verdict::Quiescent) {
    report.detail = "step limit reached";
    return report;
  }

  DecodedStore decoded;
  try {
    decoded = decode_store(prun.final_state.store);
  } catch (const ResidualCandidateConstraint& e) {
    report.verdict = CompareVerdict::Fail;
    report.detail = e.what();
    return report;
  }
  const BangState assembled{decoded.linear, decoded.persistent, prun.final_state.builtins, prun.final_state.globals};
  const NormalForm target = normalize_bang(assembled);
  report.decoded_state = target.str();

  if (equivalent(target, normalize_bang(bang.final_state))) {
    report.verdict = CompareVerdict::Pass;
    return report;
  }
  switch (find_quiescent(init_state(goal), p, target, opts.max_states)) {
    case Search::Found:
      report.verdict = CompareVerdict::Pass;
      report.matched_alternative = true;
      report.detail = "decoded state matches another quiescent derivation";
      break;
    case Search::Exhausted:
      report.verdict = CompareVerdict::Fail;
      report.detail = "no quiescent derivation yields the decoded state";
      break;
    case Search::Truncated:
      report.detail = "derivation search exceeded the state budget";
      break;
  }
  return report;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constraint Handling Rules with persistent constraints", "chrbang"};
  app.require_subcommand(1);

  RunArgs ra;
  auto* run_cmd = app.add_subcommand("run", "Run a program under a chosen semantics");
  run_cmd->add_option("--program", ra.program, "Program file")->required();
  run_cmd->add_option("--goal", ra.goal, "Goal, e.g. \"e(A,B), e(B,A)\"")->required();
  run_cmd->add_option("--semantics", ra.semantics, "bang, p or e")
      ->check(CLI::IsMember({"bang", "p", "e"}))
      ->capture_default_str();
  run_cmd->add_option("--max-steps", ra.max_steps, "Transition limit (bang, p)")->capture_default_str();
  run_cmd->add_flag("--trace", ra.trace, "Print every transition");
  run_cmd->add_option("--seed", ra.seed, "Shuffle candidate matchings (bang); 0 keeps canonical order")
      ->capture_default_str();
  run_cmd->add_option("--depth", ra.depth, "Exploration depth (e)");
  run_cmd->add_option("--max-states", ra.max_states, "Exploration state cap (e)")->capture_default_str();

  std::string enc_program, enc_output;
  auto* enc_cmd = app.add_subcommand("encode", "Translate a program into a priority program");
  enc_cmd->add_option("--program", enc_program, "Program file")->required();
  enc_cmd->add_option("-o,--output", enc_output, "Output file (default: standard output)");

  std::string cmp_program, cmp_goal;
  CompareOptions cmp_opts;
  auto* cmp_cmd = app.add_subcommand("compare", "Check the encoding against the persistent semantics");
  cmp_cmd->add_option("--program", cmp_program, "Program file")->required();
  cmp_cmd->add_option("--goal", cmp_goal, "Goal")->required();
  cmp_cmd->add_option("--max-steps", cmp_opts.max_steps, "Transition limit per engine")->capture_default_str();
  cmp_cmd->add_option("--seed", cmp_opts.seed, "Seed for the persistent-semantics run")->capture_default_str();
  cmp_cmd->add_option("--max-states", cmp_opts.max_states, "State cap for the derivation search")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*run_cmd) return cmd_run(ra, out);
    if (*enc_cmd) return cmd_encode(enc_program, enc_output, out, err);
    return cmd_compare(cmp_program, cmp_goal, cmp_opts, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace chrbang::cli
