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
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace s5bke::syntax {

// The seven core node kinds. Conjunction, disjunction, biconditional, top,
// diamond and propositional identity only exist in the concrete syntax.
enum class Kind : std::uint8_t { Var, Bot, Neg, Impl, Box, Know, Believe };

// Immutable formula tree with structural equality. Copies share nodes.
class Formula {
 public:
  static Formula var(std::string name);
  static Formula bot();
  static Formula neg(Formula sub);
  static Formula impl(Formula left, Formula right);
  static Formula box(Formula sub);
  static Formula know(Formula sub);
  static Formula believe(Formula sub);

  Kind kind() const noexcept;
  bool is(Kind k) const noexcept { return kind() == k; }

  // Only valid for Var.
  const std::string& name() const;
  // Operand of a unary node, left side of an implication.
  const Formula& sub() const;
  const Formula& left() const { return sub(); }
  // Only valid for Impl.
  const Formula& right() const;

  std::size_t hash() const noexcept;
  // Leaves have depth 0.
  int depth() const noexcept;
  std::size_t size() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  friend bool operator!=(const Formula& a, const Formula& b) noexcept { return !(a == b); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Kind kind, std::string name, const Formula* a, const Formula* b);

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

// Sugar used by tests, generators and the parser's desugarer.
Formula top();
Formula conj(const Formula& a, const Formula& b);
Formula disj(const Formula& a, const Formula& b);
Formula iff(const Formula& a, const Formula& b);
Formula diamond(const Formula& a);
Formula identity(const Formula& a, const Formula& b);

// Replaces every Var(x) leaf in chi by psi.
Formula substitute(const Formula& chi, std::string_view x, const Formula& psi);

std::set<std::string> variables(const Formula& f);
void collect_variables(const Formula& f, std::set<std::string>& out);

bool is_reserved_word(std::string_view word);
// Nonempty, lowercase initial, [A-Za-z0-9_]* tail, not reserved.
bool is_valid_variable_name(std::string_view name);

}  // namespace s5bke::syntax
