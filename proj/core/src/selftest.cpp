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

#include "s5bke/selftest.hpp"

#include <algorithm>
#include <sstream>

#include "s5bke/kernel.hpp"
#include "s5bke/search.hpp"
#include "s5bke/syntax.hpp"

namespace s5bke::selftest {

namespace {

constexpr int kInstancesPerScheme = 40;
constexpr int kAgreementFormulas = 150;

std::string describe_case(const frames::FrameModel& km, std::size_t world,
                          const syntax::Formula& f) {
  std::ostringstream os;
  os << syntax::print(f) << " fails at world " << world << " of a " << km.frame.world_count
     << "-world model";
  return os.str();
}

bool holds_everywhere(const frames::FrameModel& km, const syntax::Formula& f,
                      CheckResult& result) {
  for (std::size_t w = 0; w < km.frame.world_count; ++w) {
    ++result.cases;
    if (!frames::satisfies_at(km, w, f)) {
      result.passed = false;
      result.first_failure = describe_case(km, w, f);
      return false;
    }
  }
  return true;
}

CheckResult evidence_identity(const Population& population) {
  CheckResult result{"[]x <-> (x == top) at every world", true, 0, {}};
  const syntax::Formula theorem = syntax::parse("([]x) <-> (x == top)");
  for (const auto& km : population.over_x) {
    if (!holds_everywhere(km, theorem, result)) break;
  }
  return result;
}

CheckResult axiom_validity(const Population& population) {
  CheckResult result{"all ten axiom schemes valid", true, 0, {}};
  const std::vector<std::string> variables = {"x", "y"};
  search::Rng rng(20240611);
  std::vector<syntax::Formula> instances;
  // Bare instances first, so a failure names the simplest witness.
  for (const char* text : {"K x -> x", "K x -> B x", "[]x -> [][]x", "~[]x -> []~[]x",
                           "[]x -> K x", "K(x -> y) -> (K x -> K y)",
                           "B(x -> y) -> (B x -> B y)", "[](x -> y) -> ([]x -> []y)", "~B bot",
                           "x | ~x"}) {
    instances.push_back(syntax::parse(text));
  }
  for (kernel::SchemeId scheme : kernel::kAllSchemes) {
    for (int i = 0; i < kInstancesPerScheme; ++i) {
      instances.push_back(search::random_axiom_instance(rng, scheme, 2, variables));
    }
  }
  for (const auto& km : population.over_xy) {
    for (const auto& f : instances) {
      if (!holds_everywhere(km, f, result)) return result;
    }
  }
  return result;
}

CheckResult two_path_agreement(const Population& population) {
  CheckResult result{"denote agrees with satisfies_at", true, 0, {}};
  const std::vector<std::string> variables = {"x", "y"};
  search::Rng rng(77);
  std::vector<syntax::Formula> formulas;
  for (int i = 0; i < kAgreementFormulas; ++i) {
    formulas.push_back(search::random_formula(rng, 4, variables));
  }
  for (const auto& km : population.over_xy) {
    for (const auto& f : formulas) {
      const frames::WorldSet truth = frames::denote(km, f);
      for (std::size_t w = 0; w < km.frame.world_count; ++w) {
        ++result.cases;
        const bool in_set = ((truth >> w) & 1U) != 0;
        if (in_set != frames::satisfies_at(km, w, f)) {
          result.passed = false;
          result.first_failure = "evaluators disagree on " + syntax::print(f) + " at world " +
                                 std::to_string(w);
          return result;
        }
      }
    }
  }
  return result;
}

}  // namespace

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

Population exhaustive_population() {
  const search::SearchBounds bounds{2, 2};
  return {search::enumerate_frames(bounds, {"x"}), search::enumerate_frames(bounds, {"x", "y"})};
}

Report run(const Population& population) {
  Report report;
  report.checks.push_back(evidence_identity(population));
  report.checks.push_back(axiom_validity(population));
  report.checks.push_back(two_path_agreement(population));
  return report;
}

Report run() { return run(exhaustive_population()); }

std::string summary(const Report& report) {
  std::ostringstream os;
  for (const auto& c : report.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
    if (!c.passed) os << ": " << c.first_failure;
    os << "\n";
  }
  os << (report.passed() ? "selftest passed" : "selftest FAILED") << "\n";
  return os.str();
}

}  // namespace s5bke::selftest
