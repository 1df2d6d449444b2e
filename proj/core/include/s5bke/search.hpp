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
#include <functional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "s5bke/algebra.hpp"
#include "s5bke/frames.hpp"
#include "s5bke/kernel.hpp"

namespace s5bke::search {

using frames::FrameModel;
using frames::WorldSet;
using syntax::Formula;

inline constexpr std::size_t kMaxExhaustiveWorlds = 4;
inline constexpr int kMaxRandomDepth = 8;

struct SearchBounds {
  std::size_t max_worlds = 3;
  std::size_t max_variables = 4;
};

class GuardViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Every frame model over the full powerset with at most max_worlds worlds,
// in a fixed order: world count, then designated world, then the
// (core_K, core_B) choice of world 0, world 1, ..., then the value of each
// variable in the given order. Factivity and E_K inside E_B are built in.
class FrameEnumerator {
 public:
  FrameEnumerator(SearchBounds bounds, std::vector<std::string> variables);

  std::uint64_t count() const noexcept { return total_; }
  FrameModel at(std::uint64_t index) const;
  // Stops early when visit returns false.
  void for_each(const std::function<bool(std::uint64_t, const FrameModel&)>& visit) const;
  std::vector<FrameModel> collect() const;

  const std::vector<std::string>& variables() const noexcept { return variables_; }

  // (core_K, core_B) pairs available to world w in a frame of n worlds.
  static std::vector<std::pair<WorldSet, WorldSet>> core_choices(std::size_t n, std::size_t w);

  // Models with a fixed world count occupy one contiguous index range.
  struct Block {
    std::size_t worlds;
    std::uint64_t first;
    std::uint64_t size;
    std::uint64_t per_designated;
    std::uint64_t assignments;
    std::vector<std::vector<std::pair<WorldSet, WorldSet>>> choices;
  };
  const Block& block_of(std::uint64_t index) const;

 private:
  std::vector<std::string> variables_;
  std::vector<Block> blocks_;
  std::uint64_t total_ = 0;
};

std::vector<FrameModel> enumerate_frames(SearchBounds bounds, const std::vector<std::string>& variables);

struct TraceRow {
  std::size_t world;
  std::vector<bool> premises;
  bool goal;
};

struct Found {
  FrameModel model;
  std::uint64_t index;  // position in the enumeration
  std::vector<TraceRow> trace;
};

struct UnknownWithinBounds {
  std::uint64_t models_examined;
};

struct CountermodelReport {
  std::vector<Formula> premises;
  Formula goal;
  std::variant<Found, UnknownWithinBounds> verdict;

  bool found() const { return std::holds_alternative<Found>(verdict); }
};

// First enumerated model satisfying all premises and falsifying goal at the
// designated world. Workers scan disjoint index ranges; the smallest index
// wins, so any thread count returns the same model.
CountermodelReport find_countermodel(const std::vector<Formula>& premises, const Formula& goal,
                                     SearchBounds bounds, unsigned threads = 1);

std::vector<TraceRow> trace(const FrameModel& km, const std::vector<Formula>& premises,
                            const Formula& goal);

using Rng = std::mt19937_64;

FrameModel random_model(std::uint64_t seed, SearchBounds bounds,
                        const std::vector<std::string>& variables);
FrameModel random_model(Rng& rng, std::size_t max_worlds, const std::vector<std::string>& variables);

// Node depth at most `depth`; leaves are variables or bot.
Formula random_formula(std::uint64_t seed, int depth, const std::vector<std::string>& variables);
Formula random_formula(Rng& rng, int depth, const std::vector<std::string>& variables);

// Random instance of an axiom scheme whose metavariables are filled with
// random formulas of depth at most `depth`.
Formula random_axiom_instance(Rng& rng, kernel::SchemeId scheme, int depth,
                              const std::vector<std::string>& variables);

// Random valid algebraic model with 1..max_atoms atoms.
algebra::AlgebraicModel random_algebra(Rng& rng, unsigned max_atoms);
algebra::Assignment random_algebra_assignment(Rng& rng, const algebra::AlgebraicModel& m,
                                              const std::vector<std::string>& variables);

}  // namespace s5bke::search
