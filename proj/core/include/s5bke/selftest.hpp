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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "s5bke/frames.hpp"

namespace s5bke::selftest {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string first_failure;
};

struct Report {
  std::vector<CheckResult> checks;
  bool passed() const;
};

// Model populations the suites run over. `over_x` assigns x only,
// `over_xy` assigns x and y.
struct Population {
  std::vector<frames::FrameModel> over_x;
  std::vector<frames::FrameModel> over_xy;
};

// All enumerated frames with at most two worlds.
Population exhaustive_population();

// Evidence-as-identity theorem, axiom validity and agreement between the
// two frame evaluators.
Report run(const Population& population);
Report run();

std::string summary(const Report& report);

}  // namespace s5bke::selftest
