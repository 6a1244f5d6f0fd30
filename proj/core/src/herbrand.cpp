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

#include "chrbang/herbrand.hpp"

#include <map>

namespace chrbang {

namespace {

class UnionFind {
 public:
  void add(const Term& t) {
    if (t.is_variable()) {
      parent_.try_emplace(t.name(), t.name());
      return;
    }
    for (const auto& a : t.args()) add(a);
  }

  bool unify(const Term& a, const Term& b) {
    std::vector<std::pair<Term, Term>> work{{a, b}};
    while (!work.empty()) {
      auto [x, y] = std::move(work.back());
      work.pop_back();
      x = shallow(x);
      y = shallow(y);
      if (x.is_variable() && y.is_variable()) {
        if (x.name() != y.name()) parent_[x.name()] = y.name();
      } else if (x.is_variable()) {
        if (reaches(y, x.name())) return false;
        bound_.emplace(x.name(), std::move(y));
      } else if (y.is_variable()) {
        if (reaches(x, y.name())) return false;
        bound_.emplace(y.name(), std::move(x));
      } else {
        if (x.name() != y.name() || x.arity() != y.arity()) return false;
        for (std::size_t i = 0; i < x.arity(); ++i) work.emplace_back(x.args()[i], y.args()[i]);
      }
    }
    return true;
  }

  std::optional<Substitution> solution(const VarSet& preferred) {
    std::map<std::string, std::string> rep;
    for (const auto& [v, unused] : parent_) {
      const std::string root = find(v);
      auto it = rep.find(root);
      if (it == rep.end()) {
        rep.emplace(root, v);
      } else if (better(v, it->second, preferred)) {
        it->second = v;
      }
    }
    std::map<std::string, Term> resolved;
    VarSet active;
    bool cyclic = false;

    auto resolve_root = [&](auto& self, const std::string& root) -> Term {
      if (auto it = resolved.find(root); it != resolved.end()) return it->second;
      auto b = bound_.find(root);
      if (b == bound_.end()) {
        Term t = Term::variable(rep.at(root));
        resolved.emplace(root, t);
        return t;
      }
      if (!active.insert(root).second) {
        cyclic = true;
        return b->second;
      }
      auto rebuild = [&](auto& again, const Term& t) -> Term {
        if (t.is_variable()) return self(self, find(t.name()));
        if (t.arity() == 0) return t;
        std::vector<Term> args;
        args.reserve(t.arity());
        for (const auto& a : t.args()) args.push_back(again(again, a));
        return Term::compound(t.name(), std::move(args));
      };
      Term t = rebuild(rebuild, b->second);
      active.erase(root);
      resolved.emplace(root, t);
      return t;
    };

    Substitution out;
    std::vector<std::string> vars;
    vars.reserve(parent_.size());
    for (const auto& [v, unused] : parent_) vars.push_back(v);
    for (const auto& v : vars) {
      Term t = resolve_root(resolve_root, find(v));
      if (cyclic) return std::nullopt;
      if (!(t.is_variable() && t.name() == v)) out.emplace(v, std::move(t));
    }
    return out;
  }

 private:
  static bool better(const std::string& a, const std::string& b, const VarSet& preferred) {
    const bool pa = preferred.contains(a);
    const bool pb = preferred.contains(b);
    if (pa != pb) return pa;
    return a < b;
  }

  std::string find(const std::string& v) {
    std::string root = v;
    while (true) {
      const std::string& p = parent_.at(root);
      if (p == root) break;
      root = p;
    }
    std::string cur = v;
    while (cur != root) {
      std::string next = parent_[cur];
      parent_[cur] = root;
      cur = std::move(next);
    }
    return root;
  }

  // Occurs check through the current bindings, which are kept acyclic.
  bool reaches(const Term& t, const std::string& root) {
    if (t.is_variable()) {
      const std::string r = find(t.name());
      if (r == root) return true;
      auto it = bound_.find(r);
      return it != bound_.end() && reaches(it->second, root);
    }
    for (const auto& a : t.args()) {
      if (reaches(a, root)) return true;
    }
    return false;
  }

  Term shallow(const Term& t) {
    if (!t.is_variable()) return t;
    const std::string root = find(t.name());
    if (auto it = bound_.find(root); it != bound_.end()) return it->second;
    return Term::variable(root);
  }

  std::map<std::string, std::string> parent_;
  std::map<std::string, Term> bound_;
};

}  // namespace

std::optional<Substitution> solve(std::span<const Equation> equations, const VarSet& preferred) {
  UnionFind uf;
  for (const auto& [l, r] : equations) {
    uf.add(l);
    uf.add(r);
  }
  for (const auto& [l, r] : equations) {
    if (!uf.unify(l, r)) return std::nullopt;
  }
  return uf.solution(preferred);
}

BuiltinStore BuiltinStore::failed() {
  BuiltinStore s;
  s.failed_ = true;
  s.conjuncts_.push_back(BuiltinConstraint::falsity());
  return s;
}

BuiltinStore BuiltinStore::from_solved(Substitution bindings) {
  BuiltinStore s;
  s.bindings_ = std::move(bindings);
  for (const auto& [v, t] : s.bindings_) s.conjuncts_.push_back(BuiltinConstraint::eq(Term::variable(v), t));
  return s;
}

VarSet BuiltinStore::variables() const {
  VarSet out;
  for (const auto& [v, t] : bindings_) {
    out.insert(v);
    t.collect_variables(out);
  }
  return out;
}

std::vector<Equation> BuiltinStore::equations() const {
  std::vector<Equation> out;
  out.reserve(bindings_.size());
  for (const auto& [v, t] : bindings_) out.emplace_back(Term::variable(v), t);
  return out;
}

std::string to_string(const BuiltinStore& s) {
  if (s.is_failed()) return "fail";
  if (s.bindings().empty()) return "true";
  std::string out;
  for (const auto& [v, t] : s.bindings()) {
    if (!out.empty()) out += ", ";
    out += v + " = " + to_string(t);
  }
  return out;
}

BuiltinStore tell(const BuiltinStore& store, const BuiltinConstraint& c) {
  return tell_all(store, std::span<const BuiltinConstraint>(&c, 1));
}

BuiltinStore tell_all(const BuiltinStore& store, std::span<const BuiltinConstraint> cs) {
  BuiltinStore out = store;
  out.conjuncts_.insert(out.conjuncts_.end(), cs.begin(), cs.end());
  if (out.failed_) return out;
  std::vector<Equation> eqs;
  for (const auto& c : cs) {
    if (c.kind == BuiltinConstraint::Kind::False) {
      out.failed_ = true;
      out.bindings_.clear();
      return out;
    }
    if (c.is_eq()) eqs.emplace_back(c.lhs, c.rhs);
  }
  if (eqs.empty()) return out;
  auto existing = store.equations();
  eqs.insert(eqs.begin(), existing.begin(), existing.end());
  auto solved = solve(eqs);
  if (!solved) {
    out.failed_ = true;
    out.bindings_.clear();
    return out;
  }
  out.bindings_ = std::move(*solved);
  return out;
}

std::optional<Substitution> entailment_witness(const BuiltinStore& store, std::span<const BuiltinConstraint> goal,
                                               const VarSet& locals) {
  if (store.is_failed()) return Substitution{};
  std::vector<Equation> eqs;
  VarSet rigid;
  for (const auto& c : goal) {
    if (c.kind == BuiltinConstraint::Kind::False) return std::nullopt;
    if (!c.is_eq()) continue;
    eqs.emplace_back(store.resolve(c.lhs), store.resolve(c.rhs));
    eqs.back().first.collect_variables(rigid);
    eqs.back().second.collect_variables(rigid);
  }
  for (const auto& l : locals) rigid.erase(l);
  auto solved = solve(eqs, rigid);
  if (!solved) return std::nullopt;
  for (const auto& [v, t] : *solved) {
    if (!locals.contains(v)) return std::nullopt;
  }
  return solved;
}

bool entails(const BuiltinStore& store, std::span<const BuiltinConstraint> goal, const VarSet& locals) {
  return entailment_witness(store, goal, locals).has_value();
}

BuiltinStore project(const BuiltinStore& store, const VarSet& keep) {
  if (store.is_failed()) return store;
  auto eqs = store.equations();
  auto solved = solve(eqs, keep);
  Substitution kept;
  for (auto& [v, t] : *solved) {
    if (keep.contains(v)) kept.emplace(v, std::move(t));
  }
  return BuiltinStore::from_solved(std::move(kept));
}

namespace {

std::vector<BuiltinConstraint> as_constraints(const BuiltinStore& s) {
  std::vector<BuiltinConstraint> out;
  for (const auto& [v, t] : s.bindings()) out.push_back(BuiltinConstraint::eq(Term::variable(v), t));
  return out;
}

}  // namespace

bool equivalent(const BuiltinStore& a, const BuiltinStore& b) {
  if (a.is_failed() || b.is_failed()) return a.is_failed() == b.is_failed();
  return entails(a, as_constraints(b), {}) && entails(b, as_constraints(a), {});
}

}  // namespace chrbang
