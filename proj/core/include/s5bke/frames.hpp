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
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "s5bke/formula.hpp"

namespace s5bke::frames {

using syntax::Formula;

// Set of worlds; bit w is world w.
using WorldSet = std::uint64_t;

inline constexpr std::size_t kMaxWorlds = 64;
inline constexpr std::size_t kMaxFullWorlds = 12;
inline constexpr std::size_t kMaxPropositions = 4096;

// Frame with knowledge and belief filters stored by their principal cores:
// E_K(w) = {A in P : A contains core_k[w]}, likewise E_B.
struct Frame {
  std::size_t world_count = 1;
  std::size_t designated = 0;
  // nullopt: P is the whole powerset of W.
  std::optional<std::vector<WorldSet>> propositions;
  std::vector<WorldSet> core_k;
  std::vector<WorldSet> core_b;

  WorldSet all_worlds() const {
    return world_count >= 64 ? ~WorldSet{0} : ((WorldSet{1} << world_count) - 1);
  }
  bool full_powerset() const { return !propositions.has_value(); }
  bool is_proposition(WorldSet a) const;

  // KA = {w : A in E_K(w)}, BA = {w : A in E_B(w)}.
  WorldSet know_set(WorldSet a) const;
  WorldSet believe_set(WorldSet a) const;

  friend bool operator==(const Frame&, const Frame&) = default;
};

using Assignment = std::map<std::string, WorldSet>;

struct FrameModel {
  Frame frame;
  Assignment assignment;

  friend bool operator==(const FrameModel&, const FrameModel&) = default;
};

class SizeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DuplicatePropositions : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnboundVariable : public std::runtime_error {
 public:
  explicit UnboundVariable(const std::string& name)
      : std::runtime_error("variable '" + name + "' has no assigned proposition"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

// Raised when a truth set falls outside P, which a validated frame rules out.
class InvalidFrameState : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct FrameViolation {
  enum class Kind {
    NoWorlds,
    DesignatedOutOfRange,
    TableSize,
    SetOutsideWorlds,  // a bitmask mentions a world >= |W|
    EmptyMissing,
    WorldsMissing,
    NotClosedMeet,
    NotClosedJoin,
    NotClosedComplement,
    NotClosedKnow,
    NotClosedBelieve,
    KnowCoreNotProposition,
    BeliefCoreNotProposition,
    NotFactive,   // w not in core_k[w]
    BeliefEmpty,  // core_b[w] is empty, E_B(w) improper
    KnowNotInBelief,
    AssignmentNotProposition,
  };
  Kind kind;
  std::optional<std::size_t> world;
  WorldSet a = 0;
  WorldSet b = 0;
  std::string variable;

  std::string describe() const;
};

std::vector<FrameViolation> validate_frame(const Frame& frame);
// validate_frame plus the assignment check.
std::vector<FrameViolation> validate_model(const FrameModel& km);

// Direct reading of the satisfaction clauses; truth sets under modal
// operators are recomputed world by world.
bool satisfies_at(const FrameModel& km, std::size_t world, const Formula& f);
bool models(const FrameModel& km, const Formula& f);
// Bottom-up truth set, the extended assignment.
WorldSet denote(const FrameModel& km, const Formula& f);

// Index of the first model satisfying every premise at its designated world
// while falsifying goal there.
std::optional<std::size_t> first_counterexample(std::span<const FrameModel> family,
                                                std::span<const Formula> premises,
                                                const Formula& goal);

}  // namespace s5bke::frames
