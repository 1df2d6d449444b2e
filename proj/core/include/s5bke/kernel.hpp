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

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "s5bke/formula.hpp"

namespace s5bke::kernel {

using syntax::Formula;

// Axiom schemes in the order of the axiom list.
enum class SchemeId {
  CL,        // every classical tautology
  K_FACT,    // K p -> p
  K_TO_B,    // K p -> B p
  BOX_4,     // []p -> [][]p
  BOX_5,     // ~[]p -> []~[]p
  BOX_TO_K,  // []p -> K p
  K_DIST,    // K(p -> q) -> (K p -> K q)
  B_DIST,    // B(p -> q) -> (B p -> B q)
  BOX_DIST,  // [](p -> q) -> ([]p -> []q)
  B_CONS,    // ~B bot
};

inline constexpr std::array<SchemeId, 10> kAllSchemes = {
    SchemeId::CL,     SchemeId::K_FACT, SchemeId::K_TO_B, SchemeId::BOX_4,    SchemeId::BOX_5,
    SchemeId::BOX_TO_K, SchemeId::K_DIST, SchemeId::B_DIST, SchemeId::BOX_DIST, SchemeId::B_CONS,
};

std::string_view scheme_name(SchemeId id);
std::optional<SchemeId> scheme_from_name(std::string_view name);

struct AxiomMatch {
  std::set<SchemeId> schemes;
  // Set when the tautology oracle hit its atom guard; CL is then undecided
  // and absent from `schemes`, pattern schemes are still reported.
  bool tautology_undecided = false;

  bool contains(SchemeId id) const { return schemes.count(id) != 0; }
  bool empty() const { return schemes.empty(); }
};

AxiomMatch match_axiom(const Formula& f);

namespace just {
struct Premise {
  std::string name;
};
struct Axiom {
  SchemeId scheme;
};
// Modus ponens from line `minor` (phi) and line `major` (phi -> psi).
struct MP {
  std::size_t minor;
  std::size_t major;
};
// Axiom necessitation of line `source`.
struct AN {
  std::size_t source;
};
}  // namespace just

using Justification = std::variant<just::Premise, just::Axiom, just::MP, just::AN>;

struct ProofLine {
  Formula formula;
  Justification justification;
};

struct Derivation {
  std::map<std::string, Formula> premises;
  std::vector<ProofLine> lines;  // 1-based in reports and files
};

enum class FailureReason {
  EmptyDerivation,
  BadIndex,
  UnknownPremise,
  PremiseMismatch,
  SchemeMismatch,
  AtomLimit,
  MpShape,
  AnNonAxiom,
  AnShape,
};

std::string_view reason_code(FailureReason reason);

struct LineFailure {
  std::size_t line = 0;  // 1-based; 0 for whole-derivation failures
  FailureReason reason;
  std::string message;
};

struct CheckVerdict {
  std::optional<LineFailure> first_failure;
  bool accepted() const noexcept { return !first_failure.has_value(); }
};

CheckVerdict check_line(const Derivation& d, std::size_t line);
CheckVerdict check(const Derivation& d);

// Premise-free check whose last line is phi.
bool verify_theorem(const Formula& phi, const Derivation& d);

}  // namespace s5bke::kernel
