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

#include "chrbang/engine_e.hpp"

#include <queue>
#include <tuple>

#include "matching.hpp"

namespace chrbang {

EState init_e_state(const Goal& goal) {
  EState s;
  s.store = goal.user;
  s.builtins = tell_all(BuiltinStore{}, goal.builtin);
  s.globals = goal.variables();
  return s;
}

namespace {

VarSet e_state_variables(const EState& s) {
  VarSet out = s.globals;
  for (const auto& c : s.store) collect_variables(c, out);
  VarSet b = s.builtins.variables();
  out.insert(b.begin(), b.end());
  return out;
}

class Expander {
 public:
  Expander(const EState& s, std::vector<EState>& out) : state_(s), out_(out) {
    for (const auto& c : s.store) store_.push_back(s.builtins.resolve(c));
    used_.assign(store_.size(), false);
  }

  void rule(const Rule& variant) {
    variant_ = &variant;
    heads_ = variant.heads();
    chosen_.assign(heads_.size(), 0);
    search(0);
  }

 private:
  void search(std::size_t k) {
    if (k == heads_.size()) {
      emit();
      return;
    }
    for (std::size_t j = 0; j < store_.size(); ++j) {
      if (used_[j]) continue;
      const std::size_t m = matcher_.mark();
      if (matcher_.constraint(heads_[k], store_[j])) {
        used_[j] = true;
        chosen_[k] = j;
        search(k + 1);
        used_[j] = false;
      }
      matcher_.undo(m);
    }
  }

  void emit() {
    Substitution theta = matcher_.theta();
    auto guard = detail::instantiate(theta, variant_->guard);
    auto witness = entailment_witness(state_.builtins, guard, detail::guard_locals(variant_->guard, theta));
    if (!witness) return;
    theta.insert(witness->begin(), witness->end());

    EState post;
    post.globals = state_.globals;
    std::vector<bool> removed(store_.size(), false);
    for (std::size_t k = variant_->kept.size(); k < heads_.size(); ++k) removed[chosen_[k]] = true;
    for (std::size_t j = 0; j < store_.size(); ++j) {
      if (!removed[j]) post.store.push_back(store_[j]);
    }
    for (auto& c : detail::instantiate(theta, variant_->body_user)) post.store.push_back(std::move(c));
    auto told = detail::instantiate(theta, variant_->guard);
    auto extra = detail::instantiate(theta, variant_->body_builtin);
    told.insert(told.end(), extra.begin(), extra.end());
    post.builtins = tell_all(state_.builtins, told);
    out_.push_back(std::move(post));
  }

  const EState& state_;
  std::vector<EState>& out_;
  std::vector<UserConstraint> store_;
  std::vector<bool> used_;
  const Rule* variant_ = nullptr;
  std::vector<UserConstraint> heads_;
  std::vector<std::size_t> chosen_;
  detail::HeadMatcher matcher_;
};

std::vector<EState> successor_states(const EState& s, const Program& p) {
  std::vector<EState> out;
  if (s.builtins.is_failed()) return out;
  const VarSet avoid = e_state_variables(s);
  Expander ex(s, out);
  for (const auto& r : p.rules) {
    Rule variant = freshen(r, avoid);
    ex.rule(variant);
  }
  return out;
}

}  // namespace

std::vector<NormalForm> successors_e(const EState& s, const Program& p) {
  std::vector<NormalForm> out;
  NormalFormSet seen;
  for (const auto& post : successor_states(s, p)) {
    NormalForm nf = normalize_e(post);
    if (seen.insert(nf)) out.push_back(std::move(nf));
  }
  return out;
}

Reachability reachable(const EState& s, const Program& p, const ExploreBudget& budget) {
  Reachability r;
  NormalFormSet seen;
  std::vector<NormalForm> frontier{normalize_e(s)};
  seen.insert(frontier.front());
  r.states.push_back(frontier.front());
  r.per_depth.push_back(1);
  for (std::size_t d = 0; d < budget.depth && !frontier.empty(); ++d) {
    std::vector<NormalForm> next;
    for (const auto& nf : frontier) {
      for (auto& succ : successors_e(as_e_state(nf), p)) {
        if (!seen.insert(succ)) continue;
        if (seen.size() > budget.max_states) {
          r.truncated = true;
          r.frontier_open = true;
          return r;
        }
        r.states.push_back(succ);
        next.push_back(std::move(succ));
      }
    }
    frontier = std::move(next);
    r.per_depth.push_back(r.states.size());
  }
  // The last layer's successors may all be known already; only a new class
  // keeps the frontier open.
  for (const auto& nf : frontier) {
    for (const auto& succ : successors_e(as_e_state(nf), p)) {
      if (!seen.contains(succ)) {
        r.frontier_open = true;
        return r;
      }
    }
  }
  return r;
}

SearchOutcome search_e(const EState& s, const Program& p, const ExploreBudget& budget,
                       const std::function<bool(const NormalForm&)>& goal,
                       const std::function<std::size_t(const NormalForm&)>& score) {
  SearchOutcome out;
  using Entry = std::tuple<std::size_t, std::size_t, std::size_t>;  // score, depth, index
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  std::vector<NormalForm> nodes;
  NormalFormSet seen;

  nodes.push_back(normalize_e(s));
  seen.insert(nodes.back());
  open.emplace(score(nodes.back()), 0, 0);
  while (!open.empty()) {
    auto [sc, depth, index] = open.top();
    open.pop();
    ++out.explored;
    if (goal(nodes[index])) {
      out.found = nodes[index];
      return out;
    }
    if (depth >= budget.depth) {
      out.depth_limited = true;
      continue;
    }
    for (auto& succ : successors_e(as_e_state(nodes[index]), p)) {
      if (!seen.insert(succ)) continue;
      if (seen.size() > budget.max_states) {
        out.exhausted_budget = true;
        return out;
      }
      nodes.push_back(std::move(succ));
      open.emplace(score(nodes.back()), depth + 1, nodes.size() - 1);
    }
  }
  return out;
}

}  // namespace chrbang
