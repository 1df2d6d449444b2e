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

#include "s5bke/io.hpp"
#include "s5bke/search.hpp"
#include "s5bke/syntax.hpp"

namespace {

using namespace s5bke::io;
using s5bke::syntax::parse;

constexpr const char* kProof = R"(# demo
premises:
h: x   # the only premise
proof:
1. x ; prem h
2. x -> (y -> x) ; ax CL
3. y -> x ; mp 1 2
4. K y -> y ; ax K_FACT
5. [](K y -> y) ; an 4
)";

TEST(ProofFormat, Parses) {
  const auto d = parse_proof(kProof);
  ASSERT_EQ(d.premises.size(), 1U);
  EXPECT_EQ(d.premises.at("h"), parse("x"));
  ASSERT_EQ(d.lines.size(), 5U);
  EXPECT_EQ(d.lines[2].formula, parse("y -> x"));
  const auto* mp = std::get_if<s5bke::kernel::just::MP>(&d.lines[2].justification);
  ASSERT_NE(mp, nullptr);
  EXPECT_EQ(mp->minor, 1U);
  EXPECT_EQ(mp->major, 2U);
  EXPECT_TRUE(s5bke::kernel::check(d).accepted());
}

TEST(ProofFormat, RoundTrips) {
  const auto d = parse_proof(kProof);
  const auto again = parse_proof(write_proof(d));
  EXPECT_EQ(again.premises, d.premises);
  ASSERT_EQ(again.lines.size(), d.lines.size());
  for (std::size_t i = 0; i < d.lines.size(); ++i) {
    EXPECT_EQ(again.lines[i].formula, d.lines[i].formula);
    EXPECT_EQ(again.lines[i].justification.index(), d.lines[i].justification.index());
  }
  EXPECT_EQ(write_proof(again), write_proof(d));
}

struct BadProof {
  const char* text;
  std::size_t line;
};

class ProofErrors : public ::testing::TestWithParam<BadProof> {};

TEST_P(ProofErrors, Located) {
  try {
    parse_proof(GetParam().text);
    FAIL() << GetParam().text;
  } catch (const FileFormatError& e) {
    EXPECT_EQ(e.line(), GetParam().line) << e.what();
  }
}

INSTANTIATE_TEST_SUITE_P(
    Format, ProofErrors,
    ::testing::Values(BadProof{"", 1}, BadProof{"# only a comment\n", 2},
                      BadProof{"proof:\n1. x ; ax NOPE\n", 2},
                      BadProof{"proof:\n1. x -> ; ax CL\n", 2},
                      BadProof{"proof:\n2. x ; ax CL\n", 2},
                      BadProof{"proof:\n1. x ; mp 1\n", 2},
                      BadProof{"proof:\n1. x ax CL\n", 2},
                      BadProof{"premises:\nh x\nproof:\n1. x ; prem h\n", 2},
                      BadProof{"premises:\nh: x\nh: y\nproof:\n1. x ; prem h\n", 3},
                      BadProof{"proof:\n", 2}));

TEST(AlgebraFormat, RoundTrips) {
  const std::string text = R"({"atoms": 2, "true_point": 1,  # comment
    "K": [0, 0, 0, 3], "B": [0, 0, 0, 3], "assignment": {"x": 2, "y": 0}})";
  const AlgebraFile f = parse_algebra(text);
  EXPECT_EQ(f.model.atom_count, 2U);
  EXPECT_EQ(f.model.true_point, 1U);
  EXPECT_EQ(f.assignment.at("x"), 2U);
  const AlgebraFile back = parse_algebra(write_algebra(f));
  EXPECT_EQ(back.model, f.model);
  EXPECT_EQ(back.assignment, f.assignment);
}

TEST(AlgebraFormat, RejectsMalformed) {
  EXPECT_THROW(parse_algebra("{"), FileFormatError);
  EXPECT_THROW(parse_algebra(R"({"atoms": 1, "true_point": 0, "K": [0, 1]})"), FileFormatError);
  EXPECT_THROW(parse_algebra(R"({"atoms": 1, "true_point": 0, "K": [0, 1], "B": [0, 1], "C": 1})"),
               FileFormatError);
  EXPECT_THROW(parse_algebra(R"({"atoms": 1, "true_point": 0, "K": [0, 1], "B": [0, -1]})"),
               FileFormatError);
  EXPECT_THROW(
      parse_algebra(R"({"atoms": 1, "true_point": 0, "K": [0, 1], "B": [0, 1], "assignment": {"X": 1}})"),
      FileFormatError);
}

TEST(AlgebraFormat, ShortTablesReachValidation) {
  const AlgebraFile f = parse_algebra(R"({"atoms": 1, "true_point": 0, "K": [0], "B": [0, 1]})");
  EXPECT_THROW(s5bke::algebra::validate_algebra(f.model), s5bke::algebra::MalformedTable);
}

TEST(FrameFormat, RoundTripsEnumeratedAndRandomModels) {
  for (const auto& km : s5bke::search::enumerate_frames({2, 2}, {"x", "y"})) {
    ASSERT_EQ(parse_frame_model(write_frame_model(km)), km);
  }
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto km = s5bke::search::random_model(seed, {4, 3}, {"a", "b", "c"});
    ASSERT_EQ(parse_frame_model(write_frame_model(km)), km);
  }
}

TEST(FrameFormat, ExplicitPropositions) {
  const auto km = parse_frame_model(R"({"worlds": 3, "designated": 0,
    "propositions": [0, 1, 6, 7], "core_K": [1, 6, 6], "core_B": [1, 6, 6],
    "assignment": {"x": 6}})");
  ASSERT_TRUE(km.frame.propositions.has_value());
  EXPECT_EQ(km.frame.propositions->size(), 4U);
  EXPECT_EQ(parse_frame_model(write_frame_model(km)), km);
  EXPECT_EQ(frame_model_to_json(km)["propositions"].size(), 4U);
}

TEST(FrameFormat, RejectsMalformed) {
  EXPECT_THROW(parse_frame_model(R"({"worlds": 1})"), FileFormatError);
  EXPECT_THROW(parse_frame_model(R"({"worlds": 1, "designated": 0, "propositions": "some",
     "core_K": [1], "core_B": [1], "assignment": {}})"),
               FileFormatError);
  EXPECT_THROW(parse_frame_model(R"([1, 2])"), FileFormatError);
}

TEST(Comments, StrippedOutsideStrings) {
  EXPECT_EQ(strip_comments("a # b\n\"#\" # c\n"), "a \n\"#\" \n");
}

}  // namespace
