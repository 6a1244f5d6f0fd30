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


#include <benchmark/benchmark.h>

#include <string>

#include "chrbang/encoding.hpp"
#include "chrbang/engine_bang.hpp"
#include "chrbang/engine_e.hpp"
#include "chrbang/engine_p.hpp"
#include "chrbang/state.hpp"
#include "chrbang/syntax.hpp"

namespace {

using namespace chrbang;

const Program& hull() {
  static const Program p = parse_program("t @ e(X,Y), e(Y,Z) ==> e(X,Z).");
  return p;
}

// A directed cycle on n nodes.
Goal cycle(std::size_t n) {
  Goal g;
  for (std::size_t i = 0; i < n; ++i) {
    g.user.push_back({"e", {Term::constant("v" + std::to_string(i)), Term::constant("v" + std::to_string((i + 1) % n))}});
  }
  return g;
}

void BM_BangHullCycle(benchmark::State& state) {
  const Goal g = cycle(static_cast<std::size_t>(state.range(0)));
  std::size_t transitions = 0;
  for (auto _ : state) {
    const BangRun r = run(g, hull(), 100'000);
    transitions = r.transitions();
    benchmark::DoNotOptimize(r);
  }
  state.counters["transitions"] = static_cast<double>(transitions);
}
BENCHMARK(BM_BangHullCycle)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_EncodedHullP(benchmark::State& state) {
  const EncodedProgram enc = encode_program(hull());
  const PState init = encode_goal(cycle(static_cast<std::size_t>(state.range(0))));
  std::size_t transitions = 0;
  for (auto _ : state) {
    const PRun r = run_p(init, enc.program, 1'000'000);
    transitions = r.steps;
    benchmark::DoNotOptimize(r);
  }
  state.counters["transitions"] = static_cast<double>(transitions);
}
BENCHMARK(BM_EncodedHullP)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_EncodeHull(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(encode_program(hull()));
}
BENCHMARK(BM_EncodeHull);

void BM_NormalizeBang(benchmark::State& state) {
  const BangState s{parse_goal("e(X,Y), e(Y,Z), e(Z,X)").user, parse_goal("e(X,X), e(Y,Y), e(Z,Z), e(X,Z)").user,
                    tell_all(BuiltinStore{}, parse_goal("X = f(U), Y = g(U, V), W = a").builtin), {"X", "Y", "Z"}};
  for (auto _ : state) benchmark::DoNotOptimize(normalize_bang(s));
}
BENCHMARK(BM_NormalizeBang);

void BM_ReachableE(benchmark::State& state) {
  const EState init = init_e_state(parse_goal("e(A,B), e(B,A)"));
  const ExploreBudget budget{static_cast<std::size_t>(state.range(0)), 100'000};
  std::size_t states = 0;
  for (auto _ : state) {
    const Reachability r = reachable(init, hull(), budget);
    states = r.states.size();
    benchmark::DoNotOptimize(r);
  }
  state.counters["states"] = static_cast<double>(states);
}
BENCHMARK(BM_ReachableE)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
