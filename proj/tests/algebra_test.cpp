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

#include <algorithm>

#include "oracle.hpp"
#include "s5bke/algebra.hpp"
#include "s5bke/frames.hpp"
#include "s5bke/search.hpp"
#include "s5bke/syntax.hpp"

namespace {

using namespace s5bke::algebra;
using s5bke::syntax::parse;
using s5bke::syntax::print;

AlgebraicModel identity_model() { return {1, 0, {0, 1}, {0, 1}}; }

AlgebraicModel know_only_top() { return {2, 0, {0, 0, 0, 3}, {0, 0, 0, 3}}; }

bool has_kind(const std::vector<Violation>& vs, Violation::Kind k) {
  return std::any_of(vs.begin(), vs.end(), [k](const Violation& v) { return v.kind == k; });
}

TEST(Validate, IdentityModelIsValid) {
  EXPECT_TRUE(validate_algebra(identity_model()).empty());
  EXPECT_TRUE(validate_algebra(know_only_top()).empty());
}

TEST(Validate, KnownTopMissing) {
  AlgebraicModel m = know_only_top();
  m.know[3] = 0;
  const auto vs = validate_algebra(m);
  ASSERT_TRUE(has_kind(vs, Violation::Kind::TopMissing));
  for (unsigned atom : {0U, 1U}) {
    EXPECT_TRUE(std::any_of(vs.begin(), vs.end(), [atom](const Violation& v) {
      return v.kind == Violation::Kind::TopMissing && v.atom == atom && v.op == Operator::Know;
    }));
  }
}

TEST(Validate, KnowingTheEmptyMaskIsImproper) {
  AlgebraicModel m = know_only_top();
  m.know = {3, 3, 3, 3};
  m.believe = {3, 3, 3, 3};
  const auto vs = validate_algebra(m);
  EXPECT_TRUE(has_kind(vs, Violation::Kind::Improper));
  EXPECT_TRUE(has_kind(vs, Violation::Kind::NotFactive));
}

TEST(Validate, KnowledgeMustBeBelieved) {
  // Atom 0 knows {0}, but its beliefs are only generated by {0,1}.
  const std::vector<Element> ck{1, 2};
  const std::vector<Element> cb{3, 2};
  AlgebraicModel m = model_from_cores(2, 0, ck, cb);
  const auto vs = validate_algebra(m);
  ASSERT_EQ(vs.size(), 1U);
  EXPECT_EQ(vs[0].kind, Violation::Kind::KnowNotInBelief);
  EXPECT_EQ(vs[0].atom, 0U);
  EXPECT_EQ(vs[0].a, 1U);
  EXPECT_FALSE(vs[0].describe().empty());
}

TEST(Validate, FilterShapeViolations) {
  // Not upward closed at atom 0: {0} known, {0,1} not.
  AlgebraicModel up{2, 0, {0, 1, 0, 2}, {0, 1, 0, 3}};
  EXPECT_TRUE(has_kind(validate_algebra(up), Violation::Kind::NotUpwardClosed));

  // Not meet closed at atom 0 on three atoms: {0,1} and {0,2} known, {0} not.
  AlgebraicModel meet{3, 0, std::vector<Element>(8, 0), std::vector<Element>(8, 0)};
  for (Element a : {3U, 5U, 7U}) meet.know[a] = 1;
  for (Element a = 0; a < 8; ++a) {
    const Element core = 0b111;
    for (unsigned i = 1; i < 3; ++i) {
      if ((a & core) == core) meet.know[a] |= 1U << i;
    }
    meet.believe[a] = meet.know[a];
  }
  meet.believe[1] |= 1;  // BEL(U_0) is then the filter generated by {0}
  EXPECT_TRUE(has_kind(validate_algebra(meet), Violation::Kind::NotMeetClosed));
}

TEST(Validate, Guards) {
  AlgebraicModel big;
  big.atom_count = 17;
  EXPECT_THROW(validate_algebra(big), SizeLimitExceeded);
  AlgebraicModel short_table{2, 0, {0, 0, 3}, {0, 0, 0, 3}};
  EXPECT_THROW(validate_algebra(short_table), MalformedTable);
  AlgebraicModel bad_point = identity_model();
  bad_point.true_point = 1;
  EXPECT_TRUE(has_kind(validate_algebra(bad_point), Violation::Kind::TruePointOutOfRange));
}

// Raw tables: principal-core models with deliberate defects plus random
// per-entry corruption, so both verdicts occur often.
AlgebraicModel random_raw(s5bke::search::Rng& rng) {
  const unsigned n = 1 + static_cast<unsigned>(rng() % 3);
  const Element full = (1U << n) - 1;
  std::vector<Element> ck(n);
  std::vector<Element> cb(n);
  for (unsigned i = 0; i < n; ++i) {
    ck[i] = static_cast<Element>(rng()) & full;
    cb[i] = static_cast<Element>(rng()) & full;
    if (rng() % 2 == 0) ck[i] |= 1U << i;
    if (rng() % 2 == 0) cb[i] &= ck[i];
    if (rng() % 2 == 0 && cb[i] == 0) cb[i] = ck[i];
  }
  AlgebraicModel m = model_from_cores(n, static_cast<unsigned>(rng() % n), ck, cb);
  if (rng() % 3 == 0) {
    const std::size_t at = rng() % m.element_count();
    m.know[at] ^= 1U << (rng() % n);
  }
  if (rng() % 3 == 0) {
    const std::size_t at = rng() % m.element_count();
    m.believe[at] ^= 1U << (rng() % n);
  }
  return m;
}

TEST(Validate, AgreesWithQuadraticOracle) {
  s5bke::search::Rng rng(4242);
  int valid = 0;
  for (int i = 0; i < 5000; ++i) {
    const AlgebraicModel m = random_raw(rng);
    const bool expected = oracle::algebra_is_valid(m);
    ASSERT_EQ(validate_algebra(m).empty(), expected)
        << "atoms=" << m.atom_count << " case " << i;
    valid += expected ? 1 : 0;
  }
  EXPECT_GT(valid, 100);
  EXPECT_LT(valid, 4900);
}

TEST(Filters, CoreIsMeetOfMembers) {
  s5bke::search::Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    const AlgebraicModel m = s5bke::search::random_algebra(rng, 4);
    for (unsigned atom = 0; atom < m.atom_count; ++atom) {
      for (Operator op : {Operator::Know, Operator::Believe}) {
        Element meet = m.full();
        for (Element a = 0; a <= m.full(); ++a) {
          if (in_filter(m, op, atom, a)) meet &= a;
        }
        EXPECT_EQ(filter_core(m, op, atom), meet);
      }
    }
  }
}

TEST(Eval, Examples) {
  const AlgebraicModel one = identity_model();
  EXPECT_EQ(eval_algebra(one, {{"x", 1}}, parse("[]x")), 1U);

  const AlgebraicModel two = know_only_top();
  const Assignment g{{"x", 1}};
  EXPECT_EQ(eval_algebra(two, g, parse("[]x")), 0U);
  EXPECT_EQ(eval_algebra(two, g, parse("x == x")), 3U);
  EXPECT_TRUE(satisfies_algebra(two, g, parse("x")));
  EXPECT_FALSE(satisfies_algebra(two, g, parse("[]x")));
  EXPECT_TRUE(satisfies_algebra(two, g, parse("K x -> x")));
  EXPECT_EQ(eval_algebra(two, g, parse("~x")), 2U);
  EXPECT_EQ(eval_algebra(two, g, parse("K top")), 3U);
  EXPECT_EQ(eval_algebra(two, g, parse("B x")), 0U);
  EXPECT_THROW(eval_algebra(two, g, parse("y")), UnboundVariable);
}

TEST(Ultrafilters, AreAtoms) {
  for (unsigned n : {1U, 2U, 3U}) {
    AlgebraicModel m;
    m.atom_count = n;
    const auto u = ultrafilters(m);
    ASSERT_EQ(u.size(), n);
    for (unsigned i = 0; i < n; ++i) EXPECT_EQ(u[i], i);
  }
}

TEST(Representation, OrderIsUltrafilterInclusion) {
  const unsigned n = 3;
  for (Element a = 0; a < 8; ++a) {
    bool in_all = true;
    for (unsigned i = 0; i < n; ++i) in_all = in_all && ((a >> i) & 1U) != 0;
    EXPECT_EQ(in_all, a == 7U);
    for (Element b = 0; b < 8; ++b) {
      bool every = true;
      for (unsigned i = 0; i < n; ++i) {
        if (((a >> i) & 1U) != 0 && ((b >> i) & 1U) == 0) every = false;
      }
      EXPECT_EQ((a & b) == a, every);
    }
  }
}

class RandomAlgebras : public ::testing::Test {
 protected:
  s5bke::search::Rng rng{20260101};
  const std::vector<std::string> vars{"x", "y", "z"};
};

TEST_F(RandomAlgebras, IdentityLemma) {
  for (int i = 0; i < 300; ++i) {
    const AlgebraicModel m = s5bke::search::random_algebra(rng, 3);
    ASSERT_TRUE(validate_algebra(m).empty());
    const Assignment g = s5bke::search::random_algebra_assignment(rng, m, vars);
    const auto phi = s5bke::search::random_formula(rng, 4, vars);
    const auto psi = rng() % 4 == 0 ? phi : s5bke::search::random_formula(rng, 4, vars);
    const bool same = eval_algebra(m, g, phi) == eval_algebra(m, g, psi);
    EXPECT_EQ(satisfies_algebra(m, g, s5bke::syntax::identity(phi, psi)), same);
  }
}

TEST_F(RandomAlgebras, EvidenceAsIdentityIsTop) {
  const auto theorem = parse("([]x) <-> (x == top)");
  for (int i = 0; i < 300; ++i) {
    const AlgebraicModel m = s5bke::search::random_algebra(rng, 4);
    const Assignment g = s5bke::search::random_algebra_assignment(rng, m, vars);
    EXPECT_EQ(eval_algebra(m, g, theorem), m.full());
  }
}

TEST_F(RandomAlgebras, SubstitutionPrinciple) {
  for (int i = 0; i < 300; ++i) {
    const AlgebraicModel m = s5bke::search::random_algebra(rng, 3);
    const Assignment g = s5bke::search::random_algebra_assignment(rng, m, vars);
    const auto phi = s5bke::search::random_formula(rng, 3, vars);
    const auto psi = s5bke::search::random_formula(rng, 3, vars);
    const auto chi = s5bke::search::random_formula(rng, 3, vars);
    const auto scheme = s5bke::syntax::Formula::impl(
        s5bke::syntax::identity(phi, psi),
        s5bke::syntax::identity(s5bke::syntax::substitute(chi, "x", phi),
                                s5bke::syntax::substitute(chi, "x", psi)));
    EXPECT_EQ(eval_algebra(m, g, scheme), m.full()) << print(scheme);
  }
}

TEST(Translate, IdentityModel) {
  const auto km = algebra_to_frame(identity_model(), {{"x", 1}});
  EXPECT_EQ(km.frame.world_count, 1U);
  EXPECT_EQ(km.frame.designated, 0U);
  EXPECT_TRUE(km.frame.full_powerset());
  EXPECT_EQ(km.frame.core_k, std::vector<s5bke::frames::WorldSet>{1});
  EXPECT_EQ(km.frame.core_b, std::vector<s5bke::frames::WorldSet>{1});
  EXPECT_EQ(km.assignment.at("x"), 1U);
}

TEST(Translate, KnowOnlyTop) {
  const auto km = algebra_to_frame(know_only_top(), {});
  EXPECT_EQ(km.frame.core_k, (std::vector<s5bke::frames::WorldSet>{3, 3}));
  EXPECT_EQ(km.frame.core_b, (std::vector<s5bke::frames::WorldSet>{3, 3}));
  EXPECT_TRUE(s5bke::frames::validate_model(km).empty());
}

TEST(Translate, RejectsInvalidModel) {
  AlgebraicModel m = know_only_top();
  m.believe = {3, 3, 3, 3};
  EXPECT_THROW(algebra_to_frame(m, {}), InvalidModel);
}

TEST_F(RandomAlgebras, TranslationPreservesSatisfaction) {
  for (int i = 0; i < 200; ++i) {
    const AlgebraicModel m = s5bke::search::random_algebra(rng, 3);
    const Assignment g = s5bke::search::random_algebra_assignment(rng, m, vars);
    const auto km = algebra_to_frame(m, g);
    ASSERT_TRUE(s5bke::frames::validate_model(km).empty());
    for (int j = 0; j < 20; ++j) {
      const auto f = s5bke::search::random_formula(rng, 4, vars);
      EXPECT_EQ(satisfies_algebra(m, g, f), s5bke::frames::models(km, f)) << print(f);
      // Stronger: denotations coincide as bitmasks.
      EXPECT_EQ(eval_algebra(m, g, f), s5bke::frames::denote(km, f));
    }
  }
}

TEST(FirstCounterexample, FindsFirstRefutingInterpretation) {
  const std::vector<Interpretation> family = {
      {identity_model(), {{"x", 1}}}, {know_only_top(), {{"x", 1}}}, {know_only_top(), {{"x", 2}}}};
  const std::vector<s5bke::syntax::Formula> none;
  EXPECT_EQ(first_counterexample(family, none, parse("[]x")), std::optional<std::size_t>{1});
  const std::vector<s5bke::syntax::Formula> premise{parse("~x")};
  EXPECT_EQ(first_counterexample(family, premise, parse("x")), std::optional<std::size_t>{2});
  EXPECT_FALSE(first_counterexample(family, none, parse("K x -> x")).has_value());
}

}  // namespace
