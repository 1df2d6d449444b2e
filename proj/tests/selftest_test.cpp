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

#include <gtest/gtest.h>

#include "s5bke/search.hpp"
#include "s5bke/selftest.hpp"

namespace {

using namespace s5bke;

selftest::Population with_extra(const frames::FrameModel& rogue_x,
                                const frames::FrameModel& rogue_xy) {
  selftest::Population p = selftest::exhaustive_population();
  p.over_x.push_back(rogue_x);
  p.over_xy.push_back(rogue_xy);
  return p;
}

frames::FrameModel two_worlds(std::vector<frames::WorldSet> ck, std::vector<frames::WorldSet> cb,
                              frames::Assignment g) {
  frames::Frame f;
  f.world_count = 2;
  f.core_k = std::move(ck);
  f.core_b = std::move(cb);
  return {f, std::move(g)};
}

TEST(Selftest, CleanPopulationPasses) {
  const auto report = selftest::run();
  ASSERT_EQ(report.checks.size(), 3U);
  EXPECT_TRUE(report.passed()) << selftest::summary(report);
  for (const auto& c : report.checks) EXPECT_GT(c.cases, 0U) << c.name;
}

TEST(Selftest, PopulationSizes) {
  const auto p = selftest::exhaustive_population();
  EXPECT_EQ(p.over_x.size(), search::FrameEnumerator({2, 2}, {"x"}).count());
  EXPECT_EQ(p.over_xy.size(), search::FrameEnumerator({2, 2}, {"x", "y"}).count());
}

// A frame the enumerator would never yield: world 0 knows {1}.
TEST(Selftest, MissingFactivityIsCaught) {
  const auto rogue = two_worlds({0b10, 0b10}, {0b10, 0b10}, {{"x", 0b10}, {"y", 0}});
  const auto report = selftest::run(with_extra(rogue, rogue));
  EXPECT_FALSE(report.passed());
  EXPECT_FALSE(report.checks[1].passed);
  EXPECT_NE(report.checks[1].first_failure.find("fails at world 0"), std::string::npos)
      << report.checks[1].first_failure;
  EXPECT_NE(selftest::summary(report).find("selftest FAILED"), std::string::npos);
}

TEST(Selftest, ImproperBeliefIsCaught) {
  const auto rogue = two_worlds({0b01, 0b10}, {0, 0b10}, {{"x", 0}, {"y", 0}});
  const auto report = selftest::run(with_extra(rogue, rogue));
  EXPECT_FALSE(report.checks[1].passed);
}

}  // namespace
