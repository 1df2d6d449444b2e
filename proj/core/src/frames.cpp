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

#include "s5bke/frames.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

namespace s5bke::frames {

using syntax::Kind;

namespace {

std::string world_set_string(WorldSet a) {
  std::string out = "{";
  bool first = true;
  for (std::size_t w = 0; w < 64; ++w) {
    if (((a >> w) & 1U) == 0) continue;
    if (!first) out += ",";
    out += std::to_string(w);
    first = false;
  }
  return out + "}";
}

bool contains_world(WorldSet a, std::size_t w) { return ((a >> w) & 1U) != 0; }

void check_size(const Frame& frame) {
  if (frame.world_count > kMaxWorlds) {
    throw SizeLimitExceeded("frame has " + std::to_string(frame.world_count) +
                            " worlds (limit " + std::to_string(kMaxWorlds) + ")");
  }
  if (frame.full_powerset() && frame.world_count > kMaxFullWorlds) {
    throw SizeLimitExceeded("full powerset frames are limited to " +
                            std::to_string(kMaxFullWorlds) + " worlds");
  }
  if (!frame.full_powerset()) {
    const auto& props = *frame.propositions;
    if (props.size() > kMaxPropositions) {
      throw SizeLimitExceeded("frame lists " + std::to_string(props.size()) +
                              " propositions (limit " + std::to_string(kMaxPropositions) + ")");
    }
    std::unordered_set<WorldSet> seen;
    for (WorldSet a : props) {
      if (!seen.insert(a).second) {
        throw DuplicatePropositions("proposition " + world_set_string(a) + " is listed twice");
      }
    }
  }
}

void check_closure(const Frame& frame, std::vector<FrameViolation>& out) {
  const auto& props = *frame.propositions;
  const WorldSet all = frame.all_worlds();
  const std::unordered_set<WorldSet> members(props.begin(), props.end());
  const auto has = [&](WorldSet a) { return members.count(a) != 0; };
  using K = FrameViolation::Kind;

  if (!has(0)) out.push_back({K::EmptyMissing, std::nullopt, 0, 0, {}});
  if (!has(all)) out.push_back({K::WorldsMissing, std::nullopt, all, 0, {}});

  // One witness per kind keeps quadratic failures readable.
  bool meet_reported = false;
  bool join_reported = false;
  for (std::size_t i = 0; i < props.size(); ++i) {
    for (std::size_t j = i + 1; j < props.size(); ++j) {
      const WorldSet a = props[i];
      const WorldSet b = props[j];
      if (!meet_reported && !has(a & b)) {
        out.push_back({K::NotClosedMeet, std::nullopt, a, b, {}});
        meet_reported = true;
      }
      if (!join_reported && !has(a | b)) {
        out.push_back({K::NotClosedJoin, std::nullopt, a, b, {}});
        join_reported = true;
      }
    }
    if (meet_reported && join_reported) break;
  }
  for (WorldSet a : props) {
    if (!has(all & ~a)) {
      out.push_back({K::NotClosedComplement, std::nullopt, a, 0, {}});
      break;
    }
  }
  for (WorldSet a : props) {
    if (!has(frame.know_set(a))) {
      out.push_back({K::NotClosedKnow, std::nullopt, a, frame.know_set(a), {}});
      break;
    }
  }
  for (WorldSet a : props) {
    if (!has(frame.believe_set(a))) {
      out.push_back({K::NotClosedBelieve, std::nullopt, a, frame.believe_set(a), {}});
      break;
    }
  }
}

WorldSet extent(const FrameModel& km, const Formula& f) {
  WorldSet out = 0;
  for (std::size_t w = 0; w < km.frame.world_count; ++w) {
    if (satisfies_at(km, w, f)) out |= WorldSet{1} << w;
  }
  return out;
}

void require_proposition(const Frame& frame, WorldSet a) {
  if (!frame.is_proposition(a)) {
    throw InvalidFrameState("truth set " + world_set_string(a) +
                            " is not a proposition of the frame");
  }
}

}  // namespace

bool Frame::is_proposition(WorldSet a) const {
  if ((a & ~all_worlds()) != 0) return false;
  if (full_powerset()) return true;
  return std::find(propositions->begin(), propositions->end(), a) != propositions->end();
}

WorldSet Frame::know_set(WorldSet a) const {
  WorldSet out = 0;
  for (std::size_t w = 0; w < world_count; ++w) {
    if ((a & core_k[w]) == core_k[w]) out |= WorldSet{1} << w;
  }
  return out;
}

WorldSet Frame::believe_set(WorldSet a) const {
  WorldSet out = 0;
  for (std::size_t w = 0; w < world_count; ++w) {
    if ((a & core_b[w]) == core_b[w]) out |= WorldSet{1} << w;
  }
  return out;
}

std::string FrameViolation::describe() const {
  std::ostringstream os;
  const std::string at = world ? "world " + std::to_string(*world) + ": " : std::string();
  switch (kind) {
    case Kind::NoWorlds:
      os << "frame has no worlds";
      break;
    case Kind::DesignatedOutOfRange:
      os << "designated world " << a << " does not exist";
      break;
    case Kind::TableSize:
      os << "core tables must have one entry per world";
      break;
    case Kind::SetOutsideWorlds:
      os << at << "set " << world_set_string(a) << " mentions worlds outside W";
      break;
    case Kind::EmptyMissing:
      os << "the empty set is not a proposition";
      break;
    case Kind::WorldsMissing:
      os << "W = " << world_set_string(a) << " is not a proposition";
      break;
    case Kind::NotClosedMeet:
      os << "intersection of " << world_set_string(a) << " and " << world_set_string(b)
         << " is not a proposition";
      break;
    case Kind::NotClosedJoin:
      os << "union of " << world_set_string(a) << " and " << world_set_string(b)
         << " is not a proposition";
      break;
    case Kind::NotClosedComplement:
      os << "complement of " << world_set_string(a) << " is not a proposition";
      break;
    case Kind::NotClosedKnow:
      os << "K" << world_set_string(a) << " = " << world_set_string(b) << " is not a proposition";
      break;
    case Kind::NotClosedBelieve:
      os << "B" << world_set_string(a) << " = " << world_set_string(b) << " is not a proposition";
      break;
    case Kind::KnowCoreNotProposition:
      os << at << "knowledge core " << world_set_string(a) << " is not a proposition";
      break;
    case Kind::BeliefCoreNotProposition:
      os << at << "belief core " << world_set_string(a) << " is not a proposition";
      break;
    case Kind::NotFactive:
      os << at << "knowledge core " << world_set_string(a)
         << " does not contain the world (factivity)";
      break;
    case Kind::BeliefEmpty:
      os << at << "belief core is empty (E_B not proper)";
      break;
    case Kind::KnowNotInBelief:
      os << at << "belief core " << world_set_string(b) << " is not inside knowledge core "
         << world_set_string(a) << " (E_K not contained in E_B)";
      break;
    case Kind::AssignmentNotProposition:
      os << "assignment of '" << variable << "' = " << world_set_string(a)
         << " is not a proposition";
      break;
  }
  return os.str();
}

std::vector<FrameViolation> validate_frame(const Frame& frame) {
  using K = FrameViolation::Kind;
  std::vector<FrameViolation> out;
  if (frame.world_count == 0) {
    out.push_back({K::NoWorlds, std::nullopt, 0, 0, {}});
    return out;
  }
  check_size(frame);
  if (frame.designated >= frame.world_count) {
    out.push_back({K::DesignatedOutOfRange, std::nullopt, frame.designated, 0, {}});
  }
  if (frame.core_k.size() != frame.world_count || frame.core_b.size() != frame.world_count) {
    out.push_back({K::TableSize, std::nullopt, 0, 0, {}});
    return out;
  }
  const WorldSet all = frame.all_worlds();
  bool masks_ok = true;
  const auto inside = [&](WorldSet a, std::optional<std::size_t> w) {
    if ((a & ~all) != 0) {
      out.push_back({K::SetOutsideWorlds, w, a, 0, {}});
      masks_ok = false;
    }
  };
  if (!frame.full_powerset()) {
    for (WorldSet a : *frame.propositions) inside(a, std::nullopt);
  }
  for (std::size_t w = 0; w < frame.world_count; ++w) {
    inside(frame.core_k[w], w);
    inside(frame.core_b[w], w);
  }
  if (!masks_ok) return out;

  if (!frame.full_powerset()) check_closure(frame, out);
  for (std::size_t w = 0; w < frame.world_count; ++w) {
    const WorldSet ck = frame.core_k[w];
    const WorldSet cb = frame.core_b[w];
    if (!frame.is_proposition(ck)) out.push_back({K::KnowCoreNotProposition, w, ck, 0, {}});
    if (!frame.is_proposition(cb)) out.push_back({K::BeliefCoreNotProposition, w, cb, 0, {}});
    if (!contains_world(ck, w)) out.push_back({K::NotFactive, w, ck, 0, {}});
    if (cb == 0) out.push_back({K::BeliefEmpty, w, 0, 0, {}});
    if ((cb & ~ck) != 0) out.push_back({K::KnowNotInBelief, w, ck, cb, {}});
  }
  return out;
}

std::vector<FrameViolation> validate_model(const FrameModel& km) {
  auto out = validate_frame(km.frame);
  if (!out.empty()) return out;
  for (const auto& [name, a] : km.assignment) {
    if (!km.frame.is_proposition(a)) {
      out.push_back({FrameViolation::Kind::AssignmentNotProposition, std::nullopt, a, 0, name});
    }
  }
  return out;
}

bool satisfies_at(const FrameModel& km, std::size_t world, const Formula& f) {
  const Frame& frame = km.frame;
  switch (f.kind()) {
    case Kind::Var: {
      const auto it = km.assignment.find(f.name());
      if (it == km.assignment.end()) throw UnboundVariable(f.name());
      return contains_world(it->second, world);
    }
    case Kind::Bot:
      return false;
    case Kind::Neg:
      return !satisfies_at(km, world, f.sub());
    case Kind::Impl:
      return !satisfies_at(km, world, f.left()) || satisfies_at(km, world, f.right());
    case Kind::Box:
      for (std::size_t w = 0; w < frame.world_count; ++w) {
        if (!satisfies_at(km, w, f.sub())) return false;
      }
      return true;
    case Kind::Know: {
      const WorldSet truth = extent(km, f.sub());
      require_proposition(frame, truth);
      return (truth & frame.core_k[world]) == frame.core_k[world];
    }
    case Kind::Believe: {
      const WorldSet truth = extent(km, f.sub());
      require_proposition(frame, truth);
      return (truth & frame.core_b[world]) == frame.core_b[world];
    }
  }
  return false;
}

bool models(const FrameModel& km, const Formula& f) {
  return satisfies_at(km, km.frame.designated, f);
}

WorldSet denote(const FrameModel& km, const Formula& f) {
  const Frame& frame = km.frame;
  const WorldSet all = frame.all_worlds();
  switch (f.kind()) {
    case Kind::Var: {
      const auto it = km.assignment.find(f.name());
      if (it == km.assignment.end()) throw UnboundVariable(f.name());
      return it->second & all;
    }
    case Kind::Bot:
      return 0;
    case Kind::Neg:
      return all & ~denote(km, f.sub());
    case Kind::Impl:
      return (all & ~denote(km, f.left())) | denote(km, f.right());
    case Kind::Box:
      return denote(km, f.sub()) == all ? all : 0;
    case Kind::Know: {
      const WorldSet a = denote(km, f.sub());
      require_proposition(frame, a);
      return frame.know_set(a);
    }
    case Kind::Believe: {
      const WorldSet a = denote(km, f.sub());
      require_proposition(frame, a);
      return frame.believe_set(a);
    }
  }
  return 0;
}

std::optional<std::size_t> first_counterexample(std::span<const FrameModel> family,
                                                std::span<const Formula> premises,
                                                const Formula& goal) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    const FrameModel& km = family[i];
    const bool premises_hold = std::all_of(premises.begin(), premises.end(),
                                           [&](const Formula& p) { return models(km, p); });
    if (premises_hold && !models(km, goal)) return i;
  }
  return std::nullopt;
}

}  // namespace s5bke::frames
