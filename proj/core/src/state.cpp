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

#include "chrbang/state.hpp"

#include <algorithm>
#include <map>

namespace chrbang {

namespace {

std::string braces(const std::vector<UserConstraint>& cs) { return "{" + join(cs, ", ") + "}"; }

std::string braces(const VarSet& vs) {
  std::string out;
  for (const auto& v : vs) out += (out.empty() ? "" : ", ") + v;
  return "{" + out + "}";
}

std::string render_bindings(const std::vector<std::pair<std::string, Term>>& bs) {
  if (bs.empty()) return "true";
  std::string out;
  for (const auto& [v, t] : bs) out += (out.empty() ? "" : ", ") + v + " = " + to_string(t);
  return out;
}

Term shape_of(const Term& t, const VarSet& globals) {
  if (t.is_variable()) return globals.contains(t.name()) ? t : Term::variable("_");
  if (t.arity() == 0) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) args.push_back(shape_of(a, globals));
  return Term::compound(t.name(), std::move(args));
}

UserConstraint shape_of(const UserConstraint& c, const VarSet& globals) {
  UserConstraint out{c.functor, {}};
  out.args.reserve(c.arity());
  for (const auto& a : c.args) out.args.push_back(shape_of(a, globals));
  return out;
}

// Orders constraints by shape only, so that the numbering of local variables
// depends on their names as little as possible.
void sort_by_shape(std::vector<UserConstraint>& cs, const VarSet& globals) {
  std::vector<std::pair<UserConstraint, UserConstraint>> keyed;
  keyed.reserve(cs.size());
  for (auto& c : cs) keyed.emplace_back(shape_of(c, globals), std::move(c));
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  cs.clear();
  for (auto& [k, c] : keyed) cs.push_back(std::move(c));
}

void number_locals(const Term& t, const VarSet& globals, Substitution& renaming) {
  if (t.is_variable()) {
    if (!globals.contains(t.name()) && !renaming.contains(t.name())) {
      renaming.emplace(t.name(), Term::variable("_" + std::to_string(renaming.size())));
    }
    return;
  }
  for (const auto& a : t.args()) number_locals(a, globals, renaming);
}

NormalForm normalize(std::vector<UserConstraint> linear, std::vector<UserConstraint> persistent,
                     const BuiltinStore& builtins, const VarSet& globals, bool contraction) {
  NormalForm nf;
  if (builtins.is_failed()) {
    nf.failed = true;
    nf.globals = globals;
    return nf;
  }
  // Equality as substitution, with globals as class representatives.
  auto eqs = builtins.equations();
  Substitution sigma = *solve(eqs, globals);
  for (auto& c : linear) c = chrbang::apply(sigma, c);
  for (auto& c : persistent) c = chrbang::apply(sigma, c);

  // Projection onto globals and variables still occurring in the stores.
  VarSet keep = globals;
  for (const auto& c : linear) collect_variables(c, keep);
  for (const auto& c : persistent) collect_variables(c, keep);
  VarSet occurring = variables_of(linear);
  for (const auto& c : persistent) collect_variables(c, occurring);
  for (auto& [v, t] : sigma) {
    if (!keep.contains(v)) continue;
    occurring.insert(v);
    t.collect_variables(occurring);
    nf.bindings.emplace_back(v, std::move(t));
  }

  // Non-occurring globals are omitted.
  for (const auto& v : globals) {
    if (occurring.contains(v)) nf.globals.insert(v);
  }

  if (contraction) {
    std::sort(persistent.begin(), persistent.end());
    persistent.erase(std::unique(persistent.begin(), persistent.end()), persistent.end());
  }

  sort_by_shape(linear, nf.globals);
  sort_by_shape(persistent, nf.globals);
  Substitution renaming;
  for (const auto& c : linear)
    for (const auto& a : c.args) number_locals(a, nf.globals, renaming);
  for (const auto& c : persistent)
    for (const auto& a : c.args) number_locals(a, nf.globals, renaming);
  for (const auto& [v, t] : nf.bindings) number_locals(t, nf.globals, renaming);
  nf.local_count = renaming.size();

  for (auto& c : linear) c = chrbang::apply(renaming, c);
  for (auto& c : persistent) c = chrbang::apply(renaming, c);
  for (auto& [v, t] : nf.bindings) t = chrbang::apply(renaming, t);
  std::sort(linear.begin(), linear.end());
  std::sort(persistent.begin(), persistent.end());
  nf.linear = std::move(linear);
  nf.persistent = std::move(persistent);
  return nf;
}

class LocalRenaming {
 public:
  bool term(const Term& p, const Term& t) {
    if (p.is_variable()) {
      if (!t.is_variable()) return false;
      const bool pl = is_local_name(p.name());
      if (pl != is_local_name(t.name())) return false;
      if (!pl) return p.name() == t.name();
      auto f = forward_.find(p.name());
      if (f != forward_.end()) return f->second == t.name();
      if (backward_.contains(t.name())) return false;
      forward_.emplace(p.name(), t.name());
      backward_.emplace(t.name(), p.name());
      trail_.push_back(p.name());
      return true;
    }
    if (t.is_variable() || p.name() != t.name() || p.arity() != t.arity()) return false;
    for (std::size_t i = 0; i < p.arity(); ++i) {
      if (!term(p.args()[i], t.args()[i])) return false;
    }
    return true;
  }

  bool constraint(const UserConstraint& p, const UserConstraint& t) {
    if (p.functor != t.functor || p.arity() != t.arity()) return false;
    for (std::size_t i = 0; i < p.arity(); ++i) {
      if (!term(p.args[i], t.args[i])) return false;
    }
    return true;
  }

  std::size_t mark() const { return trail_.size(); }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto f = forward_.find(trail_.back());
      backward_.erase(f->second);
      forward_.erase(f);
      trail_.pop_back();
    }
  }

 private:
  std::map<std::string, std::string> forward_;
  std::map<std::string, std::string> backward_;
  std::vector<std::string> trail_;
};

class Matcher {
 public:
  Matcher(const std::vector<MatchTask>& tasks, const std::vector<MatchPool>& pools,
          const std::vector<std::pair<std::string, Term>>& pb, const std::vector<std::pair<std::string, Term>>& tb)
      : tasks_(tasks), pools_(pools), pattern_bindings_(pb), target_bindings_(tb) {
    used_.resize(pools.size());
    for (std::size_t i = 0; i < pools.size(); ++i) used_[i].assign(pools[i].items->size(), 0);
  }

  bool run() { return search(0); }

 private:
  bool search(std::size_t k) {
    if (k == tasks_.size()) return finish();
    const UserConstraint& c = *tasks_[k].constraint;
    for (std::size_t pi : tasks_[k].pools) {
      const MatchPool& pool = pools_[pi];
      const auto& items = *pool.items;
      for (std::size_t j = 0; j < items.size(); ++j) {
        if (pool.distinct && used_[pi][j]) continue;
        const std::size_t m = renaming_.mark();
        if (renaming_.constraint(c, items[j])) {
          ++used_[pi][j];
          if (search(k + 1)) return true;
          --used_[pi][j];
        }
        renaming_.undo(m);
      }
    }
    return false;
  }

  bool finish() {
    for (std::size_t i = 0; i < pools_.size(); ++i) {
      if (!pools_[i].cover) continue;
      for (int u : used_[i]) {
        if (u == 0) return false;
      }
    }
    if (pattern_bindings_.size() != target_bindings_.size()) return false;
    const std::size_t m = renaming_.mark();
    for (std::size_t i = 0; i < pattern_bindings_.size(); ++i) {
      if (pattern_bindings_[i].first != target_bindings_[i].first ||
          !renaming_.term(pattern_bindings_[i].second, target_bindings_[i].second)) {
        renaming_.undo(m);
        return false;
      }
    }
    return true;
  }

  const std::vector<MatchTask>& tasks_;
  const std::vector<MatchPool>& pools_;
  const std::vector<std::pair<std::string, Term>>& pattern_bindings_;
  const std::vector<std::pair<std::string, Term>>& target_bindings_;
  std::vector<std::vector<int>> used_;
  LocalRenaming renaming_;
};

constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

}  // namespace

std::string NormalForm::str(bool single_store) const {
  if (failed) return "FAILED(" + braces(globals) + ")";
  std::string out = "<" + braces(linear) + " ; ";
  if (!single_store) out += braces(persistent) + " ; ";
  return out + render_bindings(bindings) + " ; " + braces(globals) + ">";
}

std::string NormalForm::shape() const {
  if (failed) return "FAILED";
  std::string out;
  for (const auto& c : linear) out += to_string(shape_of(c, globals)) + ",";
  out += ";";
  for (const auto& c : persistent) out += to_string(shape_of(c, globals)) + ",";
  out += ";";
  for (const auto& [v, t] : bindings) out += v + "=" + to_string(shape_of(t, globals)) + ",";
  out += ";";
  for (const auto& v : globals) out += v + ",";
  return out;
}

bool operator==(const NormalForm& a, const NormalForm& b) {
  if (a.failed || b.failed) return a.failed == b.failed;
  return a.linear == b.linear && a.persistent == b.persistent && a.bindings == b.bindings && a.globals == b.globals;
}

NormalForm normalize_bang(const BangState& s) {
  return normalize(s.linear, s.persistent, s.builtins, s.globals, true);
}

NormalForm normalize_e(const EState& s) { return normalize(s.store, {}, s.builtins, s.globals, false); }

bool match_modulo_locals(const std::vector<MatchTask>& tasks, const std::vector<MatchPool>& pools,
                         const std::vector<std::pair<std::string, Term>>& pattern_bindings,
                         const std::vector<std::pair<std::string, Term>>& target_bindings) {
  return Matcher(tasks, pools, pattern_bindings, target_bindings).run();
}

bool equivalent(const NormalForm& a, const NormalForm& b) {
  if (a.failed || b.failed) return a.failed == b.failed;
  if (a == b) return true;
  if (a.local_count != b.local_count || a.local_count == 0) return false;
  if (a.globals != b.globals || a.linear.size() != b.linear.size() || a.persistent.size() != b.persistent.size()) {
    return false;
  }
  if (a.shape() != b.shape()) return false;
  std::vector<MatchPool> pools{{&b.linear, true, true}, {&b.persistent, true, true}};
  std::vector<MatchTask> tasks;
  for (const auto& c : a.linear) tasks.push_back({&c, {0}});
  for (const auto& c : a.persistent) tasks.push_back({&c, {1}});
  return match_modulo_locals(tasks, pools, a.bindings, b.bindings);
}

bool equiv_bang(const BangState& a, const BangState& b) { return equivalent(normalize_bang(a), normalize_bang(b)); }

bool equiv_e(const EState& a, const EState& b) { return equivalent(normalize_e(a), normalize_e(b)); }

BangState as_bang_state(const NormalForm& nf) {
  BangState s;
  s.globals = nf.globals;
  if (nf.failed) {
    s.builtins = BuiltinStore::failed();
    return s;
  }
  s.linear = nf.linear;
  s.persistent = nf.persistent;
  s.builtins = BuiltinStore::from_solved(Substitution(nf.bindings.begin(), nf.bindings.end()));
  return s;
}

EState as_e_state(const NormalForm& nf) {
  EState s;
  s.globals = nf.globals;
  if (nf.failed) {
    s.builtins = BuiltinStore::failed();
    return s;
  }
  s.store = nf.linear;
  s.builtins = BuiltinStore::from_solved(Substitution(nf.bindings.begin(), nf.bindings.end()));
  return s;
}

std::string to_string(const BangState& s) {
  return "<" + braces(s.linear) + " ; " + braces(s.persistent) + " ; " + to_string(s.builtins) + " ; " +
         braces(s.globals) + ">";
}

std::string to_string(const EState& s) {
  return "<" + braces(s.store) + " ; " + to_string(s.builtins) + " ; " + braces(s.globals) + ">";
}

std::uint64_t digest(const NormalForm& nf) {
  std::uint64_t h = kFnvOffset;
  for (unsigned char c : nf.str()) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

bool NormalFormSet::insert(const NormalForm& nf) {
  auto& bucket = buckets_[nf.shape()];
  for (const auto& other : bucket) {
    if (equivalent(other, nf)) return false;
  }
  bucket.push_back(nf);
  ++size_;
  return true;
}

bool NormalFormSet::contains(const NormalForm& nf) const {
  auto it = buckets_.find(nf.shape());
  if (it == buckets_.end()) return false;
  return std::any_of(it->second.begin(), it->second.end(), [&](const auto& o) { return equivalent(o, nf); });
}

}  // namespace chrbang
