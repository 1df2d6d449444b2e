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

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "s5bke/syntax.hpp"

namespace s5bke::syntax {

AtomLimitExceeded::AtomLimitExceeded(std::size_t atoms, std::size_t limit)
    : std::runtime_error("boolean abstraction has " + std::to_string(atoms) +
                         " distinct atoms (limit " + std::to_string(limit) + ")"),
      atoms_(atoms) {}

namespace {

// Postfix program over the abstraction. Atoms are evaluated 64 valuations at
// a time: valuation index v = block * 64 + lane.
struct Op {
  enum Code : std::uint8_t { Atom, False, Not, Imp } code;
  std::uint32_t atom = 0;
};

class Abstraction {
 public:
  explicit Abstraction(std::size_t limit) : limit_(limit) {}

  void compile(const Formula& f) {
    switch (f.kind()) {
      case Kind::Bot:
        program_.push_back({Op::False});
        return;
      case Kind::Neg:
        compile(f.sub());
        program_.push_back({Op::Not});
        return;
      case Kind::Impl:
        compile(f.left());
        compile(f.right());
        program_.push_back({Op::Imp});
        return;
      default: {
        auto [it, inserted] = atoms_.try_emplace(f, static_cast<std::uint32_t>(atoms_.size()));
        if (inserted && atoms_.size() > limit_) throw AtomLimitExceeded(atoms_.size(), limit_);
        program_.push_back({Op::Atom, it->second});
      }
    }
  }

  bool tautology() const {
    const std::size_t n = atoms_.size();
    // Lane patterns for the six low atoms inside one 64-bit word.
    static constexpr std::uint64_t kLane[6] = {
        0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
        0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
    };
    const std::uint64_t used_mask = n >= 6 ? ~0ULL : ((1ULL << (1ULL << n)) - 1);
    const std::uint64_t blocks = n <= 6 ? 1 : (1ULL << (n - 6));
    std::vector<std::uint64_t> stack;
    stack.reserve(program_.size());
    for (std::uint64_t block = 0; block < blocks; ++block) {
      stack.clear();
      for (const Op& op : program_) {
        switch (op.code) {
          case Op::Atom:
            if (op.atom < 6) {
              stack.push_back(kLane[op.atom]);
            } else {
              stack.push_back(((block >> (op.atom - 6)) & 1ULL) != 0 ? ~0ULL : 0ULL);
            }
            break;
          case Op::False:
            stack.push_back(0);
            break;
          case Op::Not:
            stack.back() = ~stack.back();
            break;
          case Op::Imp: {
            const std::uint64_t rhs = stack.back();
            stack.pop_back();
            stack.back() = ~stack.back() | rhs;
            break;
          }
        }
      }
      if ((stack.back() & used_mask) != used_mask) return false;
    }
    return true;
  }

 private:
  std::size_t limit_;
  std::unordered_map<Formula, std::uint32_t, FormulaHash> atoms_;
  std::vector<Op> program_;
};

}  // namespace

bool is_classical_tautology(const Formula& f, std::size_t atom_limit) {
  Abstraction abstraction(atom_limit);
  abstraction.compile(f);
  return abstraction.tautology();
}

}  // namespace s5bke::syntax
