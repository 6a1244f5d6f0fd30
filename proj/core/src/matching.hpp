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

#ifndef CHRBANG_SRC_MATCHING_HPP_
#define CHRBANG_SRC_MATCHING_HPP_

#include <string>
#include <vector>

#include "chrbang/syntax.hpp"
#include "chrbang/term.hpp"

namespace chrbang::detail {

// One-sided matching: variables of `pattern` may be bound, variables of
// `target` are treated as constants. New bindings are recorded on `trail`.
class HeadMatcher {
 public:
  bool term(const Term& pattern, const Term& target) {
    if (pattern.is_variable()) {
      auto it = theta_.find(pattern.name());
      if (it != theta_.end()) return it->second == target;
      theta_.emplace(pattern.name(), target);
      trail_.push_back(pattern.name());
      return true;
    }
    if (target.is_variable() || pattern.name() != target.name() || pattern.arity() != target.arity()) return false;
    for (std::size_t i = 0; i < pattern.arity(); ++i) {
      if (!term(pattern.args()[i], target.args()[i])) return false;
    }
    return true;
  }

  bool constraint(const UserConstraint& pattern, const UserConstraint& target) {
    if (pattern.functor != target.functor || pattern.arity() != target.arity()) return false;
    for (std::size_t i = 0; i < pattern.arity(); ++i) {
      if (!term(pattern.args[i], target.args[i])) return false;
    }
    return true;
  }

  std::size_t mark() const { return trail_.size(); }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      theta_.erase(trail_.back());
      trail_.pop_back();
    }
  }

  const Substitution& theta() const { return theta_; }

 private:
  Substitution theta_;
  std::vector<std::string> trail_;
};

inline std::vector<BuiltinConstraint> instantiate(const Substitution& s, const std::vector<BuiltinConstraint>& cs) {
  std::vector<BuiltinConstraint> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(chrbang::apply(s, c));
  return out;
}

inline std::vector<UserConstraint> instantiate(const Substitution& s, const std::vector<UserConstraint>& cs) {
  std::vector<UserConstraint> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(chrbang::apply(s, c));
  return out;
}

// Variables of the guard not bound by head matching; the guard may bind them.
inline VarSet guard_locals(const std::vector<BuiltinConstraint>& guard, const Substitution& theta) {
  VarSet out = variables_of(guard);
  for (auto it = out.begin(); it != out.end();) {
    it = theta.contains(*it) ? out.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace chrbang::detail

#endif  // CHRBANG_SRC_MATCHING_HPP_
