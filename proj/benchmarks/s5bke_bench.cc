// Copyright 2026 The s5bke Authors. All rights reserved.
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
#include <vector>

#include "s5bke/frames.hpp"
#include "s5bke/kernel.hpp"
#include "s5bke/search.hpp"
#include "s5bke/syntax.hpp"

namespace {

using namespace s5bke;

const std::vector<std::string> kVars{"x", "y", "z"};

void BM_ParsePrint(benchmark::State& state) {
  const std::string text =
      syntax::print(search::random_formula(3, static_cast<int>(state.range(0)), kVars));
  for (auto _ : state) {
    benchmark::DoNotOptimize(syntax::print(syntax::parse(text)));
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParsePrint)->Arg(4)->Arg(6)->Arg(8);

void BM_Tautology(benchmark::State& state) {
  // x0 | ... | x{n-1} | ~x0 over n abstraction atoms.
  std::string text = "x0";
  for (int64_t i = 1; i < state.range(0); ++i) text += " | x" + std::to_string(i);
  const syntax::Formula f = syntax::parse(text + " | ~x0");
  for (auto _ : state) benchmark::DoNotOptimize(syntax::is_classical_tautology(f));
}
BENCHMARK(BM_Tautology)->DenseRange(8, 20, 4);

void BM_MatchAxiom(benchmark::State& state) {
  search::Rng rng(11);
  std::vector<syntax::Formula> fs;
  for (auto scheme : kernel::kAllSchemes) fs.push_back(search::random_axiom_instance(rng, scheme, 3, kVars));
  for (auto _ : state) {
    for (const auto& f : fs) benchmark::DoNotOptimize(kernel::match_axiom(f));
  }
}
BENCHMARK(BM_MatchAxiom);

void BM_Denote(benchmark::State& state) {
  const auto km = search::random_model(5, {4, 3}, kVars);
  const auto f = search::random_formula(9, static_cast<int>(state.range(0)), kVars);
  for (auto _ : state) benchmark::DoNotOptimize(frames::denote(km, f));
}
BENCHMARK(BM_Denote)->Arg(4)->Arg(8);

void BM_SatisfiesAt(benchmark::State& state) {
  const auto km = search::random_model(5, {4, 3}, kVars);
  const auto f = search::random_formula(9, static_cast<int>(state.range(0)), kVars);
  for (auto _ : state) benchmark::DoNotOptimize(frames::satisfies_at(km, km.frame.designated, f));
}
BENCHMARK(BM_SatisfiesAt)->Arg(4)->Arg(8);

// Exhausts the |W| <= max_worlds space for a valid goal.
void BM_CountermodelExhaustive(benchmark::State& state) {
  const auto goal = syntax::parse("K(x -> y) -> (K x -> K y)");
  const search::SearchBounds bounds{static_cast<std::size_t>(state.range(0)), 4};
  const unsigned threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(search::find_countermodel({}, goal, bounds, threads));
  state.counters["models"] = static_cast<double>(search::FrameEnumerator(bounds, {"x", "y"}).count());
}
BENCHMARK(BM_CountermodelExhaustive)->Args({2, 1})->Args({3, 1})->Args({3, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
