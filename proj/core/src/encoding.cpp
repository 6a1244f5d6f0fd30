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

#include "chrbang/encoding.hpp"

#include <set>

#include "chrbang/error.hpp"
#include "chrbang/state.hpp"

namespace chrbang {

const char* tag_name(ModeTag t) {
  switch (t) {
    case ModeTag::Linear:
      return "l";
    case ModeTag::Persistent:
      return "p";
    case ModeTag::Candidate:
      return "c";
  }
  return "?";
}

UserConstraint tagged(const UserConstraint& c, ModeTag t) {
  UserConstraint out{c.functor, {}};
  out.args.reserve(c.arity() + 1);
  out.args.push_back(Term::constant(tag_name(t)));
  out.args.insert(out.args.end(), c.args.begin(), c.args.end());
  return out;
}

bool is_trivially_pathological(const Rule& r) {
  EState trigger{r.removed, tell_all(BuiltinStore{}, r.guard), {}};
  EState result{r.body_user, tell_all(BuiltinStore{}, r.body_builtin), {}};
  return equiv_e(trigger, result);
}

bool is_suspected_pathological(const Rule& r) {
  EState trigger{r.removed, tell_all(BuiltinStore{}, r.guard), {}};
  auto told = r.guard;
  told.insert(told.end(), r.body_builtin.begin(), r.body_builtin.end());
  EState result{r.body_user, tell_all(BuiltinStore{}, told), {}};
  return equiv_e(trigger, result);
}

namespace {

std::vector<UserConstraint> tag_all(const std::vector<UserConstraint>& cs, ModeTag t) {
  std::vector<UserConstraint> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(tagged(c, t));
  return out;
}

bool has_tag(const UserConstraint& c, ModeTag t) {
  return !c.args.empty() && !c.args.front().is_variable() && c.args.front().arity() == 0 &&
         c.args.front().name() == tag_name(t);
}

class Emitter {
 public:
  std::string fresh_name(const std::string& wanted) {
    std::string name = wanted;
    for (std::size_t k = 2; names_.contains(name); ++k) name = wanted + "_" + std::to_string(k);
    names_.insert(name);
    return name;
  }

  // Adds `r` unless an alpha-equivalent rule exists; returns whether added.
  bool add(Rule r) {
    for (const auto& existing : rules_) {
      if (alpha_equivalent(existing, r)) return false;
    }
    r.name = fresh_name(*r.name);
    rules_.push_back(std::move(r));
    return true;
  }

  std::vector<Rule>& rules() { return rules_; }

 private:
  std::set<std::string> names_;
  std::vector<Rule> rules_;
};

// Merges kept heads `keep` and `drop` (same symbol, both persistent) into one.
Rule merge_heads(const Rule& r, std::size_t keep, std::size_t drop) {
  Rule out = r;
  const auto& a = r.kept[keep];
  const auto& b = r.kept[drop];
  std::vector<BuiltinConstraint> guard;
  for (std::size_t k = 1; k < a.arity(); ++k) guard.push_back(BuiltinConstraint::eq(a.args[k], b.args[k]));
  guard.insert(guard.end(), r.guard.begin(), r.guard.end());
  out.guard = std::move(guard);
  out.kept.erase(out.kept.begin() + static_cast<std::ptrdiff_t>(drop));
  return out;
}

}  // namespace

EncodedProgram encode_program(const Program& p) {
  if (auto diags = check_range_restricted(p); !diags.empty()) throw NotRangeRestricted(diags.front().message());
  EncodedProgram out;
  for (std::size_t i = 0; i < p.rules.size(); ++i) {
    if (is_trivially_pathological(p.rules[i])) throw TriviallyPathological(p.rule_label(i));
    if (is_suspected_pathological(p.rules[i])) {
      out.warnings.push_back("rule '" + p.rule_label(i) + "' may be pathological; the encoding assumes it is not");
    }
  }

  Emitter emit;
  for (std::size_t i = 0; i < p.rules.size(); ++i) {
    const Rule& r = p.rules[i];
    const std::string base = p.rule_label(i);
    const std::size_t h1 = r.kept.size();
    const std::size_t h2 = r.removed.size();
    // Bit (h-1-j) of a mask set means head j is persistent, so mask 0 is all
    // linear and the first head varies slowest.
    auto split = [](const std::vector<UserConstraint>& heads, std::size_t mask) {
      std::vector<UserConstraint> linear, persistent;
      for (std::size_t j = 0; j < heads.size(); ++j) {
        const bool pers = (mask >> (heads.size() - 1 - j)) & 1u;
        (pers ? persistent : linear).push_back(heads[j]);
      }
      return std::make_pair(linear, persistent);
    };
    auto kept_heads = [&](std::size_t mask) {
      std::vector<UserConstraint> out_heads;
      for (std::size_t j = 0; j < h1; ++j) {
        const bool pers = (mask >> (h1 - 1 - j)) & 1u;
        out_heads.push_back(tagged(r.kept[j], pers ? ModeTag::Persistent : ModeTag::Linear));
      }
      return out_heads;
    };

    // Removed heads: at least one linear.
    for (std::size_t km = 0; km < (std::size_t{1} << h1); ++km) {
      for (std::size_t rm = 0; rm + 1 < (std::size_t{1} << h2); ++rm) {
        auto [removed_linear, removed_persistent] = split(r.removed, rm);
        Rule e;
        e.name = base + "_lin";
        e.priority = 3;
        e.kept = kept_heads(km);
        for (auto& c : tag_all(removed_persistent, ModeTag::Persistent)) e.kept.push_back(std::move(c));
        e.removed = tag_all(removed_linear, ModeTag::Linear);
        e.guard = r.guard;
        e.body_user = tag_all(r.body_user, ModeTag::Linear);
        e.body_builtin = r.body_builtin;
        if (emit.add(std::move(e))) ++out.stats.apply_linear;
      }
    }
    // Removed head entirely persistent.
    for (std::size_t km = 0; km < (std::size_t{1} << h1); ++km) {
      Rule e;
      e.name = base + "_per";
      e.priority = 3;
      e.kept = kept_heads(km);
      for (auto& c : tag_all(r.removed, ModeTag::Persistent)) e.kept.push_back(std::move(c));
      e.guard = r.guard;
      e.body_user = tag_all(r.body_user, ModeTag::Candidate);
      e.body_builtin = r.body_builtin;
      if (emit.add(std::move(e))) ++out.stats.apply_persistent;
    }
  }

  // Close under merging pairs of persistent heads with the same symbol.
  for (std::size_t w = 0; w < emit.rules().size(); ++w) {
    const Rule current = emit.rules()[w];
    for (std::size_t a = 0; a < current.kept.size(); ++a) {
      for (std::size_t b = a + 1; b < current.kept.size(); ++b) {
        const auto& ca = current.kept[a];
        const auto& cb = current.kept[b];
        if (!has_tag(ca, ModeTag::Persistent) || !has_tag(cb, ModeTag::Persistent)) continue;
        if (symbol_of(ca) != symbol_of(cb)) continue;
        for (auto [keep, drop] : {std::pair{a, b}, std::pair{b, a}}) {
          Rule merged = merge_heads(current, keep, drop);
          merged.name = *current.name + "_m";
          if (emit.add(std::move(merged))) ++out.stats.collapsed;
        }
      }
    }
  }

  for (const auto& sym : p.symbols()) {
    std::vector<Term> vars;
    for (std::size_t k = 1; k <= sym.arity; ++k) vars.push_back(Term::variable("T" + std::to_string(k)));
    const UserConstraint plain{sym.functor, vars};
    Rule drop;
    drop.name = sym.functor + "_" + std::to_string(sym.arity) + "_drop";
    drop.priority = 1;
    drop.kept = {tagged(plain, ModeTag::Persistent)};
    drop.removed = {tagged(plain, ModeTag::Candidate)};
    if (emit.add(std::move(drop))) ++out.stats.bookkeeping;
    Rule promote;
    promote.name = sym.functor + "_" + std::to_string(sym.arity) + "_promote";
    promote.priority = 2;
    promote.removed = {tagged(plain, ModeTag::Candidate)};
    promote.body_user = {tagged(plain, ModeTag::Persistent)};
    if (emit.add(std::move(promote))) ++out.stats.bookkeeping;
  }

  out.program.rules = std::move(emit.rules());
  return out;
}

PState encode_goal(const Goal& goal) {
  Goal g;
  g.user = tag_all(goal.user, ModeTag::Linear);
  g.builtin = goal.builtin;
  PState s = init_p_state(g);
  s.globals = goal.variables();
  return s;
}

DecodedStore decode_store(const std::vector<IdentifiedConstraint>& store) {
  DecodedStore out;
  for (const auto& ic : store) {
    const auto& c = ic.constraint;
    UserConstraint plain{c.functor, {}};
    if (!c.args.empty()) plain.args.assign(c.args.begin() + 1, c.args.end());
    if (has_tag(c, ModeTag::Linear)) {
      out.linear.push_back(std::move(plain));
    } else if (has_tag(c, ModeTag::Persistent)) {
      out.persistent.push_back(std::move(plain));
    } else if (has_tag(c, ModeTag::Candidate)) {
      throw ResidualCandidateConstraint("candidate constraint " + to_string(c) + "#" + std::to_string(ic.id) +
                                        " left in a quiescent store");
    } else {
      throw Error("constraint " + to_string(c) + " carries no mode tag");
    }
  }
  return out;
}

}  // namespace chrbang
