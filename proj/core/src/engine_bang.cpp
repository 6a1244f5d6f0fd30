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

#include "chrbang/engine_bang.hpp"

#include <algorithm>
#include <random>

#include "chrbang/error.hpp"
#include "matching.hpp"

namespace chrbang {

const char* to_string(ApplyMode m) { return m == ApplyMode::Linear ? "linear" : "persistent"; }

const char* to_string(Verdict v) { return v == Verdict::Quiescent ? "quiescent" : "step-limit"; }

std::string TraceEntry::str() const {
  return "#" + std::to_string(index) + " " + to_string(mode) + " " + rule + " :: " + post.str();
}

BangState init_state(const Goal& goal) {
  BangState s;
  s.linear = goal.user;
  s.builtins = tell_all(BuiltinStore{}, goal.builtin);
  s.globals = goal.variables();
  return s;
}

VarSet state_variables(const BangState& s) {
  VarSet out = s.globals;
  for (const auto& c : s.linear) collect_variables(c, out);
  for (const auto& c : s.persistent) collect_variables(c, out);
  VarSet b = s.builtins.variables();
  out.insert(b.begin(), b.end());
  return out;
}

namespace {

class MatchingEnumerator {
 public:
  MatchingEnumerator(const BangState& s, const BangOptions& opts) : state_(s), opts_(opts) {
    for (const auto& c : s.linear) linear_.push_back(s.builtins.resolve(c));
    for (const auto& c : s.persistent) persistent_.push_back(s.builtins.resolve(c));
    used_linear_.assign(linear_.size(), false);
    used_persistent_.assign(persistent_.size(), false);
  }

  void rule(std::size_t index, Rule variant, std::vector<Matching>& out) {
    rule_index_ = index;
    variant_ = std::move(variant);
    heads_ = variant_.heads();
    sources_.assign(heads_.size(), {});
    out_ = &out;
    search(0);
  }

 private:
  void search(std::size_t k) {
    if (k == heads_.size()) {
      emit();
      return;
    }
    for (std::size_t j = 0; j < persistent_.size(); ++j) {
      if (!opts_.collapse_persistent && used_persistent_[j]) continue;
      try_source(k, {true, j});
    }
    for (std::size_t j = 0; j < linear_.size(); ++j) {
      if (used_linear_[j]) continue;
      try_source(k, {false, j});
    }
  }

  void try_source(std::size_t k, HeadSource src) {
    const UserConstraint& target = src.persistent ? persistent_[src.index] : linear_[src.index];
    const std::size_t m = matcher_.mark();
    if (matcher_.constraint(heads_[k], target)) {
      auto used = src.persistent ? used_persistent_.begin() : used_linear_.begin();
      used[src.index] = true;
      sources_[k] = src;
      search(k + 1);
      used[src.index] = false;
    }
    matcher_.undo(m);
  }

  void emit() {
    const Substitution& theta = matcher_.theta();
    auto guard = detail::instantiate(theta, variant_.guard);
    auto witness = entailment_witness(state_.builtins, guard, detail::guard_locals(variant_.guard, theta));
    if (!witness) return;
    Matching m;
    m.rule_index = rule_index_;
    m.rule = variant_;
    m.theta = theta;
    for (auto& [v, t] : *witness) m.theta.emplace(v, std::move(t));
    const std::size_t nkept = variant_.kept.size();
    m.kept.assign(sources_.begin(), sources_.begin() + static_cast<std::ptrdiff_t>(nkept));
    m.removed.assign(sources_.begin() + static_cast<std::ptrdiff_t>(nkept), sources_.end());
    m.mode = std::any_of(m.removed.begin(), m.removed.end(), [](const HeadSource& h) { return !h.persistent; })
                 ? ApplyMode::Linear
                 : ApplyMode::Persistent;
    out_->push_back(std::move(m));
  }

  const BangState& state_;
  const BangOptions& opts_;
  std::vector<UserConstraint> linear_;
  std::vector<UserConstraint> persistent_;
  std::vector<bool> used_linear_;
  std::vector<bool> used_persistent_;
  std::size_t rule_index_ = 0;
  Rule variant_;
  std::vector<UserConstraint> heads_;
  std::vector<HeadSource> sources_;
  detail::HeadMatcher matcher_;
  std::vector<Matching>* out_ = nullptr;
};

// Applies the substitution of the built-in store and contracts duplicate
// persistent constraints; the result is equivalent to `s`.
void tidy(BangState& s) {
  if (s.builtins.is_failed()) return;
  for (auto& c : s.linear) c = s.builtins.resolve(c);
  std::vector<UserConstraint> persistent;
  for (auto& c : s.persistent) {
    UserConstraint r = s.builtins.resolve(c);
    if (std::find(persistent.begin(), persistent.end(), r) == persistent.end()) persistent.push_back(std::move(r));
  }
  s.persistent = std::move(persistent);
}

BangState transition(const BangState& s, const Matching& m) {
  BangState post = s;
  std::vector<std::size_t> gone;
  for (const auto& h : m.removed) {
    if (!h.persistent) gone.push_back(h.index);
  }
  std::sort(gone.rbegin(), gone.rend());
  for (std::size_t i : gone) post.linear.erase(post.linear.begin() + static_cast<std::ptrdiff_t>(i));

  auto body = detail::instantiate(m.theta, m.rule.body_user);
  auto& target = m.mode == ApplyMode::Linear ? post.linear : post.persistent;
  target.insert(target.end(), body.begin(), body.end());

  auto told = detail::instantiate(m.theta, m.rule.guard);
  auto extra = detail::instantiate(m.theta, m.rule.body_builtin);
  told.insert(told.end(), extra.begin(), extra.end());
  post.builtins = tell_all(s.builtins, told);
  tidy(post);
  return post;
}

std::optional<BangState> apply_against(const BangState& s, const NormalForm& pre, const Matching& m,
                                       NormalForm* post_nf) {
  BangState post = transition(s, m);
  NormalForm nf = normalize_bang(post);
  if (equivalent(pre, nf)) return std::nullopt;
  if (post_nf) *post_nf = std::move(nf);
  return post;
}

}  // namespace

std::vector<Matching> candidate_matchings(const BangState& s, const Program& p, const BangOptions& opts) {
  std::vector<Matching> out;
  if (s.builtins.is_failed()) return out;
  const VarSet avoid = state_variables(s);
  MatchingEnumerator e(s, opts);
  for (std::size_t i = 0; i < p.rules.size(); ++i) e.rule(i, freshen(p.rules[i], avoid), out);
  return out;
}

std::optional<BangState> apply(const BangState& s, const Matching& m) {
  return apply_against(s, normalize_bang(s), m, nullptr);
}

std::optional<BangStep> step(const BangState& s, const Program& p, const BangOptions& opts, std::size_t step_index) {
  if (s.builtins.is_failed()) return std::nullopt;
  auto candidates = candidate_matchings(s, p, opts);
  if (opts.seed != 0) {
    std::mt19937_64 rng(opts.seed * 0x9E3779B97F4A7C15ull + step_index);
    std::shuffle(candidates.begin(), candidates.end(), rng);
  }
  const NormalForm pre = normalize_bang(s);
  for (const auto& m : candidates) {
    NormalForm post_nf;
    if (auto post = apply_against(s, pre, m, &post_nf)) {
      TraceEntry e;
      e.index = step_index;
      e.rule = p.rule_label(m.rule_index);
      e.mode = m.mode;
      e.pre_digest = digest(pre);
      e.post_digest = digest(post_nf);
      e.post = std::move(post_nf);
      return BangStep{std::move(*post), std::move(e)};
    }
  }
  return std::nullopt;
}

std::vector<BangStep> successors(const BangState& s, const Program& p, const BangOptions& opts) {
  std::vector<BangStep> out;
  if (s.builtins.is_failed()) return out;
  const NormalForm pre = normalize_bang(s);
  const std::uint64_t pre_digest = digest(pre);
  for (const auto& m : candidate_matchings(s, p, opts)) {
    NormalForm post_nf;
    if (auto post = apply_against(s, pre, m, &post_nf)) {
      TraceEntry e;
      e.index = 1;
      e.rule = p.rule_label(m.rule_index);
      e.mode = m.mode;
      e.pre_digest = pre_digest;
      e.post_digest = digest(post_nf);
      e.post = std::move(post_nf);
      out.push_back({std::move(*post), std::move(e)});
    }
  }
  return out;
}

BangRun run_from(const BangState& initial, const Program& p, std::size_t max_steps, const BangOptions& opts) {
  if (auto diags = check_range_restricted(p); !diags.empty()) throw NotRangeRestricted(diags.front().message());
  BangRun r;
  r.final_state = initial;
  tidy(r.final_state);
  for (std::size_t k = 1;; ++k) {
    if (k > max_steps) {
      // Budget spent; it is quiescent only if no further step exists.
      r.verdict = step(r.final_state, p, opts, k) ? Verdict::StepLimit : Verdict::Quiescent;
      return r;
    }
    auto next = step(r.final_state, p, opts, k);
    if (!next) {
      r.verdict = Verdict::Quiescent;
      return r;
    }
    r.final_state = std::move(next->state);
    r.trace.steps.push_back(std::move(next->entry));
  }
}

BangRun run(const Goal& goal, const Program& p, std::size_t max_steps, const BangOptions& opts) {
  return run_from(init_state(goal), p, max_steps, opts);
}

}  // namespace chrbang
