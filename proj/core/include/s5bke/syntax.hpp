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
#include <stdexcept>
#include <string>
#include <string_view>

#include "s5bke/formula.hpp"

namespace s5bke::syntax {

// Byte offsets into the parsed text, half-open.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, SourceSpan span)
      : std::runtime_error(message), span_(span) {}
  SourceSpan span() const noexcept { return span_; }

 private:
  SourceSpan span_;
};

// Parses the ASCII grammar and returns the desugared core tree.
//
// Precedence, tightest first:
//   ~  []  <>  K  B      unary prefixes
//   &
//   |
//   ->                   right-associative
//   <->  ==              non-associative
//
// `#` starts a comment that runs to the end of the line.
Formula parse(std::string_view text);

// Canonical, fully parenthesized, core connectives only.
std::string print(const Formula& f);

class AtomLimitExceeded : public std::runtime_error {
 public:
  AtomLimitExceeded(std::size_t atoms, std::size_t limit);
  std::size_t atoms() const noexcept { return atoms_; }

 private:
  std::size_t atoms_;
};

inline constexpr std::size_t kMaxTautologyAtoms = 20;

// True iff the boolean abstraction of f is a tautology. Variables and
// maximal subformulas headed by [], K or B become atoms; structurally
// identical subformulas share an atom.
bool is_classical_tautology(const Formula& f, std::size_t atom_limit = kMaxTautologyAtoms);

}  // namespace s5bke::syntax
