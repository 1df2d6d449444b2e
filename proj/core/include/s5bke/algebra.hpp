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
struct FrameModel;
}

namespace s5bke::algebra {

using syntax::Formula;

// An element of the powerset algebra over `atom_count` atoms; bit j is atom j.
using Element = std::uint32_t;

inline constexpr unsigned kMaxAtoms = 16;

// Finite powerset Boolean algebra with a designated principal ultrafilter
// (the atom `true_point`) and explicit K and B operator tables.
// The evidence operator is not stored: it maps the top element to itself
// and everything else to the bottom element.
struct AlgebraicModel {
  unsigned atom_count = 1;
  unsigned true_point = 0;
  std::vector<Element> know;     // 2^atom_count entries
  std::vector<Element> believe;  // 2^atom_count entries

  std::size_t element_count() const { return std::size_t{1} << atom_count; }
  Element full() const { return static_cast<Element>(element_count() - 1); }

  friend bool operator==(const AlgebraicModel&, const AlgebraicModel&) = default;
};

using Assignment = std::map<std::string, Element>;

class SizeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedTable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnboundVariable : public std::runtime_error {
 public:
  explicit UnboundVariable(const std::string& name)
      : std::runtime_error("variable '" + name + "' has no assigned value"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

enum class Operator { Know, Believe };

struct Violation {
  enum class Kind {
    TruePointOutOfRange,
    TopMissing,       // 1 not in the filter
    NotUpwardClosed,  // a in F, a <= b, b not in F
    NotMeetClosed,    // a, b in F, a & b not in F
    Improper,         // 0 in the filter
    NotFactive,       // a in KNOW(U_i) but atom i not in a
    KnowNotInBelief,  // a in KNOW(U_i) but not in BEL(U_i)
  };
  Kind kind;
  unsigned atom = 0;
  std::optional<Operator> op;
  Element a = 0;
  Element b = 0;

  std::string describe() const;
};

// Checks both operator tables against the filter conditions at every
// ultrafilter. Empty result means the model is valid.
std::vector<Violation> validate_algebra(const AlgebraicModel& m);

class InvalidModel : public std::runtime_error {
 public:
  explicit InvalidModel(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// KNOW(U_i) / BEL(U_i) membership via the table.
bool in_filter(const AlgebraicModel& m, Operator op, unsigned atom, Element a);

// Intersection of all members of KNOW(U_i) / BEL(U_i). Meaningful for
// validated models, where the filter is the upset of this element.
Element filter_core(const AlgebraicModel& m, Operator op, unsigned atom);

Element eval_algebra(const AlgebraicModel& m, const Assignment& g, const Formula& f);
bool satisfies_algebra(const AlgebraicModel& m, const Assignment& g, const Formula& f);

// In a finite powerset algebra every ultrafilter is principal; the result
// lists the atoms generating them, i.e. [0, atom_count).
std::vector<unsigned> ultrafilters(const AlgebraicModel& m);

// Throws InvalidModel unless m validates.
// Worlds are the ultrafilters; the proposition of element m is the set of
// ultrafilters containing it, which is m itself as a bitmask.
frames::FrameModel algebra_to_frame(const AlgebraicModel& m, const Assignment& g);

// Builds the unique valid table pair whose filters at each atom are the
// upsets of the given cores. cores must satisfy i in core_k[i] and
// 0 != core_b[i] subset of core_k[i].
AlgebraicModel model_from_cores(unsigned atom_count, unsigned true_point,
                                std::span<const Element> core_k, std::span<const Element> core_b);

struct Interpretation {
  AlgebraicModel model;
  Assignment assignment;
};

// Index of the first interpretation satisfying every premise but not goal.
std::optional<std::size_t> first_counterexample(std::span<const Interpretation> family,
                                                std::span<const Formula> premises,
                                                const Formula& goal);

}  // namespace s5bke::algebra
