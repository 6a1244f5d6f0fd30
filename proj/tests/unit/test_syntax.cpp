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

#include <random>

#include "chrbang/error.hpp"
#include "chrbang/syntax.hpp"
#include "generators.hpp"

using namespace chrbang;

namespace {

UserConstraint uc(const std::string& text) { return parse_goal(text).user.at(0); }

VarSet vars_of(const std::vector<UserConstraint>& cs) {
  VarSet out;
  for (const auto& c : cs)
    for (const auto& a : c.args) a.collect_variables(out);
  return out;
}

VarSet vars_of(const std::vector<BuiltinConstraint>& cs) {
  VarSet out;
  for (const auto& c : cs) {
    c.lhs.collect_variables(out);
    c.rhs.collect_variables(out);
  }
  return out;
}

}  // namespace

TEST_CASE("propagation rule of the transitive hull") {
  const Program p = parse_program("t @ e(X,Y), e(Y,Z) ==> e(X,Z).");
  REQUIRE(p.rules.size() == 1);
  const Rule& r = p.rules[0];
  CHECK(r.name == "t");
  CHECK_FALSE(r.priority);
  CHECK(r.kept == std::vector{uc("e(X,Y)"), uc("e(Y,Z)")});
  CHECK(r.removed.empty());
  CHECK(r.guard.empty());
  CHECK(r.body_user == std::vector{uc("e(X,Z)")});
  CHECK(r.is_propagation());
}

TEST_CASE("simplification and simpagation heads") {
  const Program p = parse_program(
      "r2 @ b <=> c.\n"
      "p(X) \\ q(X) <=> X = Y | r(Y).\n"
      "a, b <=> true.\n");
  REQUIRE(p.rules.size() == 3);
  CHECK(p.rules[0].kept.empty());
  CHECK(p.rules[0].removed == std::vector{uc("b")});
  CHECK(p.rules[0].body_user == std::vector{uc("c")});
  CHECK(p.rules[1].kept == std::vector{uc("p(X)")});
  CHECK(p.rules[1].removed == std::vector{uc("q(X)")});
  CHECK(p.rules[1].guard.size() == 1);
  CHECK_FALSE(p.rules[1].name);
  CHECK(p.rule_label(1) == "r2");
}

TEST_CASE("rule labels") {
  const Program p = parse_program("a <=> b. named @ b <=> c.");
  CHECK(p.rule_label(0) == "r1");
  CHECK(p.rule_label(1) == "named");
}

TEST_CASE("priorities") {
  const Program p = parse_program("1 :: a <=> b. x @ 2 :: b ==> c.");
  CHECK(p.has_priorities());
  CHECK(p.rules[0].priority == 1);
  CHECK(p.rules[1].priority == 2);
  CHECK_FALSE(parse_program("a <=> b.").has_priorities());
  CHECK_THROWS_AS(parse_program("1 :: a <=> b. b <=> c."), ParseError);
  CHECK_THROWS_AS(parse_program("0 :: a <=> b."), ParseError);
}

TEST_CASE("syntax errors carry positions") {
  CHECK_THROWS_AS(parse_program("x <=> 1=2=3 | y."), ParseError);
  CHECK_THROWS_AS(parse_program("x <=> y"), ParseError);
  CHECK_THROWS_AS(parse_program("r @ a <=> b. r @ b <=> c."), ParseError);
  CHECK_THROWS_AS(parse_program("a \\ b ==> c."), ParseError);
  CHECK_THROWS_AS(parse_program("a <=> b | c."), ParseError);
  CHECK_THROWS_AS(parse_program("X <=> c."), ParseError);
  try {
    parse_program("a <=> b.\n  c <=> $.");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 9);
  }
}

TEST_CASE("comments, true and fail") {
  const Program p = parse_program("% leading comment\na <=> true. % trailing\nb <=> fail.");
  REQUIRE(p.rules.size() == 2);
  CHECK(p.rules[0].body_user.empty());
  CHECK(p.rules[0].body_builtin.empty());
  REQUIRE(p.rules[1].body_builtin.size() == 1);
  CHECK(p.rules[1].body_builtin[0].kind == BuiltinConstraint::Kind::False);
}

TEST_CASE("goals") {
  const Goal g = parse_goal("e(A,B), e(B,A)");
  CHECK(g.user == std::vector{uc("e(A,B)"), uc("e(B,A)")});
  CHECK(g.builtin.empty());
  const Goal empty = parse_goal("");
  CHECK(empty.user.empty());
  CHECK(empty.builtin.empty());
  const Goal mixed = parse_goal("p(X), X=f(Y).");
  CHECK(mixed.user == std::vector{uc("p(X)")});
  REQUIRE(mixed.builtin.size() == 1);
  CHECK(mixed.builtin[0] == BuiltinConstraint::eq(Term::variable("X"), Term::compound("f", {Term::variable("Y")})));
  CHECK(g.variables() == VarSet{"A", "B"});
  CHECK_THROWS_AS(parse_goal("p(X"), ParseError);
}

TEST_CASE("local variables and range restriction") {
  const Program hull = parse_program("t @ e(X,Y), e(Y,Z) ==> e(X,Z).");
  CHECK(local_variables(hull.rules[0]).empty());
  CHECK(check_range_restricted(hull).empty());
  const Program open = parse_program("a ==> p(X).");
  CHECK(local_variables(open.rules[0]) == VarSet{"X"});
  const auto diags = check_range_restricted(open);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].unbound == VarSet{"X"});
  CHECK(diags[0].message().find('X') != std::string::npos);
  const Program simp = parse_program("p(X) \\ q(X) <=> X = Y | r(Y).");
  CHECK(local_variables(simp.rules[0]) == VarSet{"Y"});
  CHECK(check_range_restricted(Program{}).empty());
}

TEST_CASE("range restriction agrees with a direct set computation") {
  testing::Rng rng(7);
  const std::vector<std::string> pool{"X", "Y", "Z", "W"};
  for (int i = 0; i < 300; ++i) {
    Rule r;
    std::uniform_int_distribution<int> n(0, 2);
    for (int k = 0, m = 1 + n(rng); k < m; ++k) r.removed.push_back(testing::random_constraint(rng, {"X", "Y"}));
    for (int k = 0, m = n(rng); k < m; ++k) r.body_user.push_back(testing::random_constraint(rng, pool));
    for (int k = 0, m = n(rng); k < m; ++k) r.guard.push_back(testing::random_equation(rng, pool, 1));
    const VarSet heads = vars_of(r.removed);
    VarSet rest = vars_of(r.body_user);
    for (const auto& v : vars_of(r.guard)) rest.insert(v);
    bool restricted = true;
    for (const auto& v : rest) restricted = restricted && heads.contains(v);
    CHECK(check_range_restricted(Program{{r}}).empty() == restricted);
  }
}

TEST_CASE("pretty-printing round-trips") {
  const char* sources[] = {
      "t @ e(X,Y), e(Y,Z) ==> e(X,Z).",
      "r2 @ b <=> c.",
      "p(X) \\ q(X) <=> X = Y | r(Y).",
      "a <=> true.",
      "a <=> fail.",
      "x @ 3 :: e(p,X,Y) ==> X = Y, Y = Z | e(c,X,Z).",
      "d @ p(f(X,g(a))), q(Y) <=> X = Y | q(X), X = b.",
  };
  for (const char* src : sources) {
    const Program p = parse_program(src);
    CAPTURE(src);
    CHECK(parse_program(to_string(p)) == p);
  }
  testing::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Program p = testing::random_program(rng);
    CHECK(parse_program(to_string(p)) == p);
    const Goal g = testing::random_goal(rng);
    CHECK(parse_goal(to_string(g)) == g);
  }
  CHECK(to_string(Program{}).empty());
}

TEST_CASE("freshen produces disjoint alpha-equivalent variants") {
  const Rule t = parse_program("t @ e(X,Y), e(Y,Z) ==> e(X,Z).").rules[0];
  const Rule f = freshen(t, {"X", "Y"});
  const VarSet fv = f.variables();
  CHECK(fv.size() == 3);
  CHECK_FALSE(fv.contains("X"));
  CHECK_FALSE(fv.contains("Y"));
  CHECK(alpha_equivalent(t, f));

  const Rule ground = parse_program("a <=> b.").rules[0];
  CHECK(freshen(ground, {}) == ground);

  Rule cur = t;
  VarSet avoid;
  for (int i = 0; i < 4; ++i) {
    for (const auto& v : cur.variables()) avoid.insert(v);
    const Rule next = freshen(cur, avoid);
    for (const auto& v : next.variables()) CHECK_FALSE(avoid.contains(v));
    CHECK(alpha_equivalent(cur, next));
    cur = next;
  }
  CHECK(parse_program(to_string(Program{{cur}})).rules[0] == cur);
}

TEST_CASE("alpha equivalence is bijective and order-sensitive") {
  auto rule = [](const char* s) { return parse_program(s).rules[0]; };
  CHECK(alpha_equivalent(rule("p(X), q(Y) ==> r(X,Y)."), rule("p(A), q(B) ==> r(A,B).")));
  CHECK_FALSE(alpha_equivalent(rule("p(X), q(Y) ==> r(X,Y)."), rule("p(A), q(A) ==> r(A,A).")));
  CHECK_FALSE(alpha_equivalent(rule("p(X), q(X) ==> r(X,X)."), rule("p(A), q(B) ==> r(A,B).")));
  CHECK_FALSE(alpha_equivalent(rule("p(X), q(Y) ==> true."), rule("q(Y), p(X) ==> true.")));
  CHECK_FALSE(alpha_equivalent(rule("1 :: a <=> b."), rule("2 :: a <=> b.")));
  CHECK(alpha_equivalent(rule("x @ a <=> b."), rule("y @ a <=> b.")));
}

TEST_CASE("program symbols") {
  const Program p = parse_program("p(X) \\ q(X) <=> r(X, a). s ==> t.");
  const std::set<Symbol> expected{{"p", 1}, {"q", 1}, {"r", 2}, {"s", 0}, {"t", 0}};
  CHECK(p.symbols() == expected);
}
