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

#include "chrbang/encoding.hpp"
#include "chrbang/error.hpp"

using namespace chrbang;

namespace {

bool has_variant(const Program& p, const Rule& r) {
  for (const auto& x : p.rules)
    if (alpha_equivalent(x, r)) return true;
  return false;
}

void check_same_rules(const Program& got, const std::string& expected_text) {
  const Program expected = parse_program(expected_text);
  CHECK(got.rules.size() == expected.rules.size());
  for (const auto& r : expected.rules) {
    CAPTURE(to_string(r));
    CHECK(has_variant(got, r));
  }
}

Rule rule(const std::string& text) { return parse_program(text).rules.at(0); }

}  // namespace

TEST_CASE("tags") {
  const UserConstraint c = parse_goal("e(A,B)").user[0];
  CHECK(tagged(c, ModeTag::Linear) == parse_goal("e(l,A,B)").user[0]);
  CHECK(tagged(c, ModeTag::Persistent) == parse_goal("e(p,A,B)").user[0]);
  CHECK(tagged(c, ModeTag::Candidate) == parse_goal("e(c,A,B)").user[0]);
}

TEST_CASE("pathological rules") {
  CHECK(is_trivially_pathological(rule("a <=> a.")));
  CHECK_FALSE(is_trivially_pathological(rule("t @ e(X,Y), e(Y,Z) ==> e(X,Z).")));
  const Rule guarded = rule("p(X) <=> X = a | p(X).");
  CHECK_FALSE(is_trivially_pathological(guarded));
  CHECK(is_suspected_pathological(guarded));
  CHECK_FALSE(is_suspected_pathological(rule("a <=> b.")));
  CHECK(is_trivially_pathological(rule("p(X) <=> p(Y), X = Y.")));
}

TEST_CASE("transitive hull encoding") {
  const EncodedProgram e = encode_program(parse_program("t @ e(X,Y), e(Y,Z) ==> e(X,Z)."));
  check_same_rules(e.program,
                   "3 :: e(l,X,Y), e(l,Y,Z) ==> e(c,X,Z).\n"
                   "3 :: e(l,X,Y), e(p,Y,Z) ==> e(c,X,Z).\n"
                   "3 :: e(p,X,Y), e(l,Y,Z) ==> e(c,X,Z).\n"
                   "3 :: e(p,X,Y), e(p,Y,Z) ==> e(c,X,Z).\n"
                   "3 :: e(p,X,Y) ==> X = Y, Y = Z | e(c,X,Z).\n"
                   "3 :: e(p,Y,Z) ==> Y = X, Z = Y | e(c,X,Z).\n"
                   "1 :: e(p,T1,T2) \\ e(c,T1,T2) <=> true.\n"
                   "2 :: e(c,T1,T2) <=> e(p,T1,T2).\n");
  CHECK(e.stats.apply_linear == 0);
  CHECK(e.stats.apply_persistent == 4);
  CHECK(e.stats.collapsed == 2);
  CHECK(e.stats.bookkeeping == 2);
  CHECK(e.warnings.empty());
  CHECK(parse_program(to_string(e.program)) == e.program);
}

TEST_CASE("single simplification rule") {
  const EncodedProgram e = encode_program(parse_program("a <=> b."));
  check_same_rules(e.program,
                   "3 :: a(l) <=> b(l).\n"
                   "3 :: a(p) ==> b(c).\n"
                   "1 :: a(p) \\ a(c) <=> true.\n"
                   "2 :: a(c) <=> a(p).\n"
                   "1 :: b(p) \\ b(c) <=> true.\n"
                   "2 :: b(c) <=> b(p).\n");
}

TEST_CASE("empty program") {
  const EncodedProgram e = encode_program(Program{});
  CHECK(e.program.rules.empty());
  CHECK(to_string(e.program).empty());
}

TEST_CASE("rejections and warnings") {
  CHECK_THROWS_AS(encode_program(parse_program("a <=> a.")), TriviallyPathological);
  try {
    encode_program(parse_program("ok @ a <=> b.\nbad @ c <=> c."));
    FAIL("expected rejection");
  } catch (const TriviallyPathological& e) {
    CHECK(e.rule() == "bad");
  }
  CHECK_THROWS_AS(encode_program(parse_program("a ==> p(X).")), NotRangeRestricted);
  const EncodedProgram w = encode_program(parse_program("g @ p(X) <=> X = a | p(X)."));
  REQUIRE(w.warnings.size() == 1);
  CHECK(w.warnings[0].find("'g'") != std::string::npos);
}

TEST_CASE("split enumeration is exhaustive") {
  const char* symbols[] = {"a", "b", "c", "d", "e", "f"};
  for (std::size_t h = 1; h <= 4; ++h) {
    std::string heads;
    for (std::size_t i = 0; i < h; ++i) heads += (i ? ", " : "") + std::string(symbols[i]);
    const EncodedProgram e = encode_program(parse_program(heads + " ==> z."));
    CHECK(e.stats.apply_persistent == (std::size_t{1} << h));
    CHECK(e.stats.apply_linear == 0);
    CHECK(e.stats.collapsed == 0);
  }
  for (std::size_t h1 = 0; h1 <= 2; ++h1) {
    for (std::size_t h2 = 1; h2 <= 3; ++h2) {
      std::string kept, removed;
      for (std::size_t i = 0; i < h1; ++i) kept += (i ? ", " : "") + std::string(symbols[i]);
      for (std::size_t i = 0; i < h2; ++i) removed += (i ? ", " : "") + std::string(symbols[h1 + i]);
      const std::string src = (kept.empty() ? removed : kept + " \\ " + removed) + " <=> z.";
      CAPTURE(src);
      const EncodedProgram e = encode_program(parse_program(src));
      CHECK(e.stats.apply_linear == (std::size_t{1} << h1) * ((std::size_t{1} << h2) - 1));
      CHECK(e.stats.apply_persistent == (std::size_t{1} << h1));
      CHECK(e.stats.bookkeeping == 2 * (h1 + h2 + 1));
    }
  }
}

TEST_CASE("collapse closure reaches every merge") {
  const EncodedProgram e = encode_program(parse_program("q(X), q(Y), q(Z) ==> r(X,Y,Z)."));
  auto persistent_heads = [](const Rule& r) {
    std::size_t n = 0;
    for (const auto& h : r.kept) n += h.args[0] == Term::constant("p");
    return n;
  };
  // Every rule with two persistent heads has a merged successor with one head
  // fewer and one more guard equation.
  for (const auto& r : e.program.rules) {
    if (r.priority != 3 || persistent_heads(r) < 2) continue;
    bool merged = false;
    for (const auto& m : e.program.rules) {
      merged = merged || (m.priority == 3 && m.kept.size() + 1 == r.kept.size() &&
                          m.guard.size() == r.guard.size() + 1 && persistent_heads(m) + 1 == persistent_heads(r));
    }
    CAPTURE(to_string(r));
    CHECK(merged);
  }
  CHECK(has_variant(e.program, rule("3 :: q(p,X) ==> X = Y, X = Z | r(c,X,Y,Z).")));
  bool fully_merged = false;
  for (const auto& r : e.program.rules) fully_merged = fully_merged || (r.priority == 3 && r.kept.size() == 1);
  CHECK(fully_merged);
  for (std::size_t i = 0; i < e.program.rules.size(); ++i)
    for (std::size_t j = i + 1; j < e.program.rules.size(); ++j)
      CHECK_FALSE(alpha_equivalent(e.program.rules[i], e.program.rules[j]));
  CHECK(parse_program(to_string(e.program)) == e.program);
}

TEST_CASE("goal encoding") {
  const PState s = encode_goal(parse_goal("e(A,B), e(B,A)"));
  REQUIRE(s.goal.size() == 2);
  CHECK(std::get<UserConstraint>(s.goal[0]) == parse_goal("e(l,A,B)").user[0]);
  CHECK(std::get<UserConstraint>(s.goal[1]) == parse_goal("e(l,B,A)").user[0]);
  CHECK(s.globals == VarSet{"A", "B"});
  CHECK(s.next_id == 0);
  CHECK(s.tokens.empty());
  CHECK(encode_goal(parse_goal("")).goal.empty());
  const PState b = encode_goal(parse_goal("p(X), X = a"));
  REQUIRE(b.goal.size() == 2);
  CHECK(std::get<UserConstraint>(b.goal[0]) == parse_goal("p(l,X)").user[0]);
  CHECK(std::holds_alternative<BuiltinConstraint>(b.goal[1]));
}

TEST_CASE("store decoding") {
  auto ic = [](const std::string& c, std::size_t id) { return IdentifiedConstraint{parse_goal(c).user[0], id}; };
  const DecodedStore d = decode_store({ic("e(l,A,B)", 0), ic("e(p,A,A)", 3), ic("e(l,B,A)", 1)});
  CHECK(d.linear == parse_goal("e(A,B), e(B,A)").user);
  CHECK(d.persistent == parse_goal("e(A,A)").user);
  const DecodedStore empty = decode_store({});
  CHECK(empty.linear.empty());
  CHECK(empty.persistent.empty());
  CHECK_THROWS_AS(decode_store({ic("e(c,A,B)", 2)}), ResidualCandidateConstraint);
  CHECK_THROWS_AS(decode_store({ic("e(A,B)", 2)}), Error);
  CHECK_THROWS_AS(decode_store({ic("a", 2)}), Error);
}
