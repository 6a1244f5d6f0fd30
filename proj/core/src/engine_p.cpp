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

#include "chrbang/engine_p.hpp"

#include <algorithm>
#include <numeric>

#include "chrbang/error.hpp"
#include "matching.hpp"

namespace chrbang {

const char* to_string(PTransition t) {
  switch (t) {
    case PTransition::Solve:
      return "Solve";
    case PTransition::Introduce:
      return "Introduce";
    case PTransition::Apply:
      return "Apply";
  }
  return "?";
}

PState init_p_state(const Goal& goal) {
  PState s;
  for (const auto& c : goal.user) s.goal.emplace_back(c);
  for (const auto& c : goal.builtin) s.goal.emplace_back(c);
  s.globals = goal.variables();
  return s;
}

namespace {

VarSet p_state_variables(const PState& s) {
  VarSet out = s.globals;
  for (const auto& item : s.goal) {
    std::visit([&](const auto& c) { collect_variables(c, out); }, item);
  }
  for (const auto& ic : s.store) collect_variables(ic.constraint, out);
  VarSet b = s.builtins.variables();
  out.insert(b.begin(), b.end());
  return out;
}

std::vector<std::size_t> priority_order(const Program& p) {
  std::vector<std::size_t> order(p.rules.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return *p.rules[a].priority < *p.rules[b].priority; });
  return order;
}

// Enumerates instances in selection order; `visit` returns false to stop.
class InstanceEnumerator {
 public:
  explicit InstanceEnumerator(const PState& s) : state_(s) {
    for (const auto& ic : s.store) resolved_.push_back(s.builtins.resolve(ic.constraint));
    used_.assign(resolved_.size(), false);
  }

  template <typename Visit>
  bool rule(std::size_t index, int priority, const Rule& variant, Visit&& visit) {
    index_ = index;
    priority_ = priority;
    variant_ = &variant;
    heads_ = variant.heads();
    chosen_.assign(heads_.size(), 0);
    return search(0, visit);
  }

 private:
  template <typename Visit>
  bool search(std::size_t k, Visit& visit) {
    if (k == heads_.size()) return emit(visit);
    for (std::size_t j = 0; j < resolved_.size(); ++j) {
      if (used_[j]) continue;
      const std::size_t m = matcher_.mark();
      if (matcher_.constraint(heads_[k], resolved_[j])) {
        used_[j] = true;
        chosen_[k] = j;
        const bool go_on = search(k + 1, visit);
        used_[j] = false;
        if (!go_on) {
          matcher_.undo(m);
          return false;
        }
      }
      matcher_.undo(m);
    }
    return true;
  }

  template <typename Visit>
  bool emit(Visit& visit) {
    Token token{index_, {}};
    for (std::size_t j : chosen_) token.ids.push_back(state_.store[j].id);
    if (state_.tokens.contains(token)) return true;
    const Substitution& theta = matcher_.theta();
    auto guard = detail::instantiate(theta, variant_->guard);
    auto witness = entailment_witness(state_.builtins, guard, detail::guard_locals(variant_->guard, theta));
    if (!witness) return true;
    PInstance inst{index_, priority_, std::move(token), theta, *variant_};
    inst.theta.insert(witness->begin(), witness->end());
    return visit(std::move(inst));
  }

  const PState& state_;
  std::vector<UserConstraint> resolved_;
  std::vector<bool> used_;
  std::size_t index_ = 0;
  int priority_ = 0;
  const Rule* variant_ = nullptr;
  std::vector<UserConstraint> heads_;
  std::vector<std::size_t> chosen_;
  detail::HeadMatcher matcher_;
};

void require_priorities(const Program& p) {
  for (std::size_t i = 0; i < p.rules.size(); ++i) {
    if (!p.rules[i].priority) {
      throw Error("priorities required: rule '" + p.rule_label(i) + "' has no priority");
    }
  }
}

}  // namespace

std::vector<PInstance> applicable_instances(const PState& s, const Program& p) {
  require_priorities(p);
  std::vector<PInstance> out;
  if (s.builtins.is_failed()) return out;
  const VarSet avoid = p_state_variables(s);
  InstanceEnumerator e(s);
  for (std::size_t i : priority_order(p)) {
    Rule variant = freshen(p.rules[i], avoid);
    e.rule(i, *p.rules[i].priority, variant, [&](PInstance inst) {
      out.push_back(std::move(inst));
      return true;
    });
  }
  return out;
}

std::optional<std::pair<PState, PStepInfo>> step_p(const PState& s, const Program& p) {
  require_priorities(p);
  PStepInfo info;
  if (!s.goal.empty()) {
    PState next = s;
    GoalItem item = std::move(next.goal.front());
    next.goal.pop_front();
    if (auto* b = std::get_if<BuiltinConstraint>(&item)) {
      info.kind = PTransition::Solve;
      next.builtins = tell(next.builtins, *b);
    } else {
      info.kind = PTransition::Introduce;
      info.ids.push_back(next.next_id);
      next.store.push_back({std::get<UserConstraint>(std::move(item)), next.next_id++});
    }
    return std::make_pair(std::move(next), std::move(info));
  }
  if (s.builtins.is_failed()) return std::nullopt;

  const VarSet avoid = p_state_variables(s);
  InstanceEnumerator e(s);
  std::optional<PInstance> chosen;
  for (std::size_t i : priority_order(p)) {
    if (chosen && *p.rules[i].priority > chosen->priority) break;
    Rule variant = freshen(p.rules[i], avoid);
    e.rule(i, *p.rules[i].priority, variant, [&](PInstance inst) {
      chosen = std::move(inst);
      return false;
    });
    if (chosen) break;
  }
  if (!chosen) return std::nullopt;

  PState next = s;
  const std::size_t nkept = chosen->variant.kept.size();
  std::vector<std::size_t> removed(chosen->token.ids.begin() + static_cast<std::ptrdiff_t>(nkept),
                                   chosen->token.ids.end());
  std::erase_if(next.store, [&](const IdentifiedConstraint& ic) {
    return std::find(removed.begin(), removed.end(), ic.id) != removed.end();
  });
  const Rule& r = chosen->variant;
  for (const auto& c : detail::instantiate(chosen->theta, r.body_builtin)) next.goal.emplace_back(c);
  for (const auto& c : detail::instantiate(chosen->theta, r.body_user)) next.goal.emplace_back(c);
  next.tokens.insert(chosen->token);

  info.kind = PTransition::Apply;
  info.rule = chosen->rule;
  info.priority = chosen->priority;
  info.ids = chosen->token.ids;
  return std::make_pair(std::move(next), std::move(info));
}

PRun run_p(const PState& initial, const Program& p, std::size_t max_steps, bool trace) {
  require_priorities(p);
  PRun r;
  r.final_state = initial;
  while (true) {
    auto next = step_p(r.final_state, p);
    if (!next) {
      r.verdict = Verdict::Quiescent;
      return r;
    }
    if (r.steps == max_steps) {
      r.verdict = Verdict::StepLimit;
      return r;
    }
    ++r.steps;
    if (trace) {
      const auto& [state, info] = *next;
      std::string line = "#" + std::to_string(r.steps) + " " + to_string(info.kind);
      if (info.kind == PTransition::Apply) {
        line += " " + p.rule_label(info.rule) + " [";
        for (std::size_t i = 0; i < info.ids.size(); ++i) line += (i ? "," : "") + std::to_string(info.ids[i]);
        line += "]";
      } else if (info.kind == PTransition::Introduce) {
        const auto& ic = state.store.back();
        line += " " + to_string(ic.constraint) + "#" + std::to_string(ic.id);
      }
      line += " :: " + to_string(state, p);
      r.trace.push_back(std::move(line));
    }
    r.final_state = std::move(next->first);
  }
}

std::string to_string(const PState& s, const Program& p) {
  std::string goal;
  for (const auto& item : s.goal) {
    if (!goal.empty()) goal += ", ";
    goal += std::visit([](const auto& c) { return to_string(c); }, item);
  }
  std::string store;
  for (const auto& ic : s.store) {
    if (!store.empty()) store += ", ";
    store += to_string(ic.constraint) + "#" + std::to_string(ic.id);
  }
  std::string tokens;
  for (const auto& t : s.tokens) {
    if (!tokens.empty()) tokens += ", ";
    tokens += "(" + p.rule_label(t.rule) + ",[";
    for (std::size_t i = 0; i < t.ids.size(); ++i) tokens += (i ? "," : "") + std::to_string(t.ids[i]);
    tokens += "])";
  }
  std::string globals;
  for (const auto& v : s.globals) globals += (globals.empty() ? "" : ", ") + v;
  return "<{" + goal + "} ; {" + store + "} ; " + to_string(s.builtins) + " ; {" + tokens + "} ; " +
         std::to_string(s.next_id) + " ; {" + globals + "}>";
}

}  // namespace chrbang
