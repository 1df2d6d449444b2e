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

#include "s5bke/kernel.hpp"

#include "s5bke/syntax.hpp"

namespace s5bke::kernel {

using syntax::Kind;

namespace {

constexpr std::array<std::string_view, 10> kSchemeNames = {
    "CL", "K_FACT", "K_TO_B", "BOX_4", "BOX_5", "BOX_TO_K", "K_DIST", "B_DIST", "BOX_DIST", "B_CONS",
};

// p -> q  with  op(p -> q) -> (op p -> op q)
bool is_distribution(const Formula& f, Kind op) {
  if (!f.is(Kind::Impl)) return false;
  const Formula& head = f.left();
  const Formula& tail = f.right();
  if (!head.is(op) || !head.sub().is(Kind::Impl) || !tail.is(Kind::Impl)) return false;
  const Formula& p = head.sub().left();
  const Formula& q = head.sub().right();
  return tail.left().is(op) && tail.right().is(op) && tail.left().sub() == p &&
         tail.right().sub() == q;
}

void match_patterns(const Formula& f, std::set<SchemeId>& out) {
  if (f.is(Kind::Neg)) {
    if (f.sub().is(Kind::Believe) && f.sub().sub().is(Kind::Bot)) out.insert(SchemeId::B_CONS);
    return;
  }
  if (!f.is(Kind::Impl)) return;
  const Formula& lhs = f.left();
  const Formula& rhs = f.right();

  if (lhs.is(Kind::Know)) {
    if (rhs == lhs.sub()) out.insert(SchemeId::K_FACT);
    if (rhs.is(Kind::Believe) && rhs.sub() == lhs.sub()) out.insert(SchemeId::K_TO_B);
  }
  if (lhs.is(Kind::Box)) {
    if (rhs.is(Kind::Box) && rhs.sub() == lhs) out.insert(SchemeId::BOX_4);
    if (rhs.is(Kind::Know) && rhs.sub() == lhs.sub()) out.insert(SchemeId::BOX_TO_K);
  }
  if (lhs.is(Kind::Neg) && lhs.sub().is(Kind::Box) && rhs.is(Kind::Box) && rhs.sub() == lhs) {
    out.insert(SchemeId::BOX_5);
  }
  if (is_distribution(f, Kind::Know)) out.insert(SchemeId::K_DIST);
  if (is_distribution(f, Kind::Believe)) out.insert(SchemeId::B_DIST);
  if (is_distribution(f, Kind::Box)) out.insert(SchemeId::BOX_DIST);
}

std::string line_ref(std::size_t i) { return "line " + std::to_string(i); }

CheckVerdict fail(std::size_t line, FailureReason reason, std::string message) {
  return CheckVerdict{LineFailure{line, reason, std::move(message)}};
}

bool cites_earlier(std::size_t cited, std::size_t own) { return cited >= 1 && cited < own; }

}  // namespace

std::string_view scheme_name(SchemeId id) { return kSchemeNames[static_cast<std::size_t>(id)]; }

std::optional<SchemeId> scheme_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kSchemeNames.size(); ++i) {
    if (kSchemeNames[i] == name) return static_cast<SchemeId>(i);
  }
  return std::nullopt;
}

AxiomMatch match_axiom(const Formula& f) {
  AxiomMatch result;
  match_patterns(f, result.schemes);
  try {
    if (syntax::is_classical_tautology(f)) result.schemes.insert(SchemeId::CL);
  } catch (const syntax::AtomLimitExceeded&) {
    result.tautology_undecided = true;
  }
  return result;
}

std::string_view reason_code(FailureReason reason) {
  switch (reason) {
    case FailureReason::EmptyDerivation:
      return "empty-derivation";
    case FailureReason::BadIndex:
      return "bad-index";
    case FailureReason::UnknownPremise:
      return "unknown-premise";
    case FailureReason::PremiseMismatch:
      return "premise-mismatch";
    case FailureReason::SchemeMismatch:
      return "scheme-mismatch";
    case FailureReason::AtomLimit:
      return "atom-limit";
    case FailureReason::MpShape:
      return "mp-shape";
    case FailureReason::AnNonAxiom:
      return "an-non-axiom";
    case FailureReason::AnShape:
      return "an-shape";
  }
  return "unknown";
}

CheckVerdict check_line(const Derivation& d, std::size_t line) {
  if (line < 1 || line > d.lines.size()) {
    return fail(line, FailureReason::BadIndex, line_ref(line) + " does not exist");
  }
  const ProofLine& self = d.lines[line - 1];
  const auto formula_at = [&](std::size_t i) -> const Formula& { return d.lines[i - 1].formula; };

  if (const auto* p = std::get_if<just::Premise>(&self.justification)) {
    const auto it = d.premises.find(p->name);
    if (it == d.premises.end()) {
      return fail(line, FailureReason::UnknownPremise, "no premise named '" + p->name + "'");
    }
    if (it->second != self.formula) {
      return fail(line, FailureReason::PremiseMismatch,
                  "formula differs from premise '" + p->name + "'");
    }
    return {};
  }

  if (const auto* a = std::get_if<just::Axiom>(&self.justification)) {
    const AxiomMatch match = match_axiom(self.formula);
    if (match.contains(a->scheme)) return {};
    if (a->scheme == SchemeId::CL && match.tautology_undecided) {
      return fail(line, FailureReason::AtomLimit,
                  "tautology check exceeds the atom limit of " +
                      std::to_string(syntax::kMaxTautologyAtoms));
    }
    return fail(line, FailureReason::SchemeMismatch,
                "formula is not an instance of " + std::string(scheme_name(a->scheme)));
  }

  if (const auto* mp = std::get_if<just::MP>(&self.justification)) {
    if (!cites_earlier(mp->minor, line) || !cites_earlier(mp->major, line)) {
      return fail(line, FailureReason::BadIndex, "modus ponens must cite earlier lines");
    }
    const Formula& major = formula_at(mp->major);
    if (!major.is(Kind::Impl) || major.left() != formula_at(mp->minor) ||
        major.right() != self.formula) {
      return fail(line, FailureReason::MpShape,
                  line_ref(mp->major) + " is not " + line_ref(mp->minor) + " -> this formula");
    }
    return {};
  }

  const auto& an = std::get<just::AN>(self.justification);
  if (!cites_earlier(an.source, line)) {
    return fail(line, FailureReason::BadIndex, "necessitation must cite an earlier line");
  }
  const ProofLine& source = d.lines[an.source - 1];
  if (!std::holds_alternative<just::Axiom>(source.justification) ||
      !check_line(d, an.source).accepted()) {
    return fail(line, FailureReason::AnNonAxiom,
                "necessitation applies only to axiom lines; " + line_ref(an.source) +
                    " is not a valid axiom line");
  }
  if (!self.formula.is(Kind::Box) || self.formula.sub() != source.formula) {
    return fail(line, FailureReason::AnShape, "formula is not [] of " + line_ref(an.source));
  }
  return {};
}

CheckVerdict check(const Derivation& d) {
  if (d.lines.empty()) return fail(0, FailureReason::EmptyDerivation, "derivation has no lines");
  for (std::size_t i = 1; i <= d.lines.size(); ++i) {
    CheckVerdict v = check_line(d, i);
    if (!v.accepted()) return v;
  }
  return {};
}

bool verify_theorem(const Formula& phi, const Derivation& d) {
  return d.premises.empty() && !d.lines.empty() && d.lines.back().formula == phi &&
         check(d).accepted();
}

}  // namespace s5bke::kernel
