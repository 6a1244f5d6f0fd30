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

#include <doctest.h>

#include "chrbang/engine_e.hpp"
#include "generators.hpp"

using namespace chrbang;

namespace {

const char* kHull = "t @ e(X,Y), e(Y,Z) ==> e(X,Z).";

EState estate(const std::string& g, VarSet v) { return {parse_goal(g).user, {}, std::move(v)}; }

bool contains(const std::vector<NormalForm>& v, const EState& s) {
  const NormalForm nf = normalize_e(s);
  for (const auto& x : v)
    if (equivalent(x, nf)) return true;
  return false;
}

}  // namespace

TEST_CASE("successors of the 2-cycle") {
  const Program hull = parse_program(kHull);
  const EState sigma = init_e_state(parse_goal("e(A,B), e(B,A)"));
  const auto next = successors_e(sigma, hull);
  CHECK(next.size() == 2);
  CHECK(contains(next, estate("e(A,B), e(B,A), e(A,A)", {"A", "B"})));
  CHECK(contains(next, estate("e(A,B), e(B,A), e(B,B)", {"A", "B"})));
  CHECK(successors_e(EState{}, hull).empty());
}

TEST_CASE("duplicate matchings collapse") {
  const auto next = successors_e(estate("a, a", {}), parse_program("r1 @ a ==> b."));
  REQUIRE(next.size() == 1);
  CHECK(equivalent(next[0], normalize_e(estate("a, a, b", {}))));
}

TEST_CASE("reachability") {
  const Program hull = parse_program(kHull);
  const EState sigma = init_e_state(parse_goal("e(A,B), e(B,A)"));
  const Reachability d0 = reachable(sigma, hull, {0, 100});
  CHECK(d0.states.size() == 1);
  CHECK(d0.frontier_open);
  const Reachability d1 = reachable(sigma, hull, {1, 100});
  CHECK(d1.states.size() == 3);
  const Reachability d4 = reachable(sigma, hull, {4, 10'000});
  REQUIRE(d4.per_depth.size() == 5);
  for (std::size_t d = 1; d < d4.per_depth.size(); ++d) CHECK(d4.per_depth[d] > d4.per_depth[d - 1]);
  CHECK(d4.frontier_open);
  CHECK_FALSE(d4.truncated);
  // Monotone in the depth bound.
  for (const auto& nf : d1.states) {
    bool found = false;
    for (const auto& x : d4.states) found = found || equivalent(x, nf);
    CHECK(found);
  }
  const Reachability capped = reachable(sigma, hull, {6, 20});
  CHECK(capped.truncated);
  CHECK(capped.states.size() <= 20);
}

TEST_CASE("terminating programs close their frontier") {
  const Reachability r = reachable(init_e_state(parse_goal("a")), parse_program("a <=> b. b <=> c."), {5, 100});
  CHECK(r.states.size() == 3);
  CHECK_FALSE(r.frontier_open);
}

TEST_CASE("reachable sets are closed under equivalence rewrites") {
  testing::Rng rng(12);
  const Program hull = parse_program(kHull);
  const Reachability r = reachable(init_e_state(parse_goal("e(A,B), e(B,A)")), hull, {3, 1000});
  for (const auto& nf : r.states) {
    EState s = as_e_state(nf);
    // Axiom 2: a strictly local binding; axiom 3: an extra global.
    s.builtins = tell(s.builtins, BuiltinConstraint::eq(Term::variable("S9"), Term::constant("a")));
    s.globals.insert("G9");
    std::shuffle(s.store.begin(), s.store.end(), rng);
    bool found = false;
    for (const auto& x : r.states) found = found || equiv_e(as_e_state(x), s);
    CHECK(found);
  }
}

TEST_CASE("best-first search") {
  const Program hull = parse_program(kHull);
  const EState sigma = init_e_state(parse_goal("e(A,B), e(B,A)"));
  auto count_loops = [](const NormalForm& nf) {
    std::size_t n = 0;
    for (const auto& c : nf.linear)
      if (c.args[0] == c.args[1]) ++n;
    return n;
  };
  const auto found = search_e(
      sigma, hull, {8, 10'000}, [&](const NormalForm& nf) { return count_loops(nf) >= 3; },
      [&](const NormalForm& nf) { return 10 - count_loops(nf); });
  REQUIRE(found.found);
  CHECK(count_loops(*found.found) >= 3);
  const auto miss = search_e(
      sigma, hull, {2, 10'000}, [&](const NormalForm& nf) { return count_loops(nf) >= 3; },
      [&](const NormalForm&) { return std::size_t{0}; });
  CHECK_FALSE(miss.found);
  CHECK_FALSE(miss.exhausted_budget);
}
