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

#include "s5bke/formula.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

namespace s5bke::syntax {

struct Formula::Node {
  Kind kind;
  std::string name;
  std::vector<Formula> children;
  std::size_t hash = 0;
  int depth = 0;
  std::size_t size = 1;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::make(Kind kind, std::string name, const Formula* a, const Formula* b) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  std::size_t h = mix(0, static_cast<std::size_t>(kind));
  if (kind == Kind::Var) {
    h = mix(h, std::hash<std::string>{}(name));
    node->name = std::move(name);
  }
  if (a != nullptr) {
    node->children.push_back(*a);
    h = mix(h, a->hash());
    node->depth = a->depth() + 1;
    node->size += a->size();
  }
  if (b != nullptr) {
    node->children.push_back(*b);
    h = mix(h, b->hash());
    node->depth = std::max(node->depth, b->depth() + 1);
    node->size += b->size();
  }
  node->hash = h;
  return Formula(std::move(node));
}

Formula Formula::var(std::string name) { return make(Kind::Var, std::move(name), nullptr, nullptr); }

Formula Formula::bot() {
  static const Formula instance = make(Kind::Bot, {}, nullptr, nullptr);
  return instance;
}

Formula Formula::neg(Formula sub) { return make(Kind::Neg, {}, &sub, nullptr); }
Formula Formula::impl(Formula left, Formula right) { return make(Kind::Impl, {}, &left, &right); }
Formula Formula::box(Formula sub) { return make(Kind::Box, {}, &sub, nullptr); }
Formula Formula::know(Formula sub) { return make(Kind::Know, {}, &sub, nullptr); }
Formula Formula::believe(Formula sub) { return make(Kind::Believe, {}, &sub, nullptr); }

Kind Formula::kind() const noexcept { return node_->kind; }

const std::string& Formula::name() const {
  if (node_->kind != Kind::Var) throw std::logic_error("Formula::name on non-variable");
  return node_->name;
}

const Formula& Formula::sub() const {
  if (node_->children.empty()) throw std::logic_error("Formula::sub on leaf");
  return node_->children[0];
}

const Formula& Formula::right() const {
  if (node_->children.size() < 2) throw std::logic_error("Formula::right on non-implication");
  return node_->children[1];
}

std::size_t Formula::hash() const noexcept { return node_->hash; }
int Formula::depth() const noexcept { return node_->depth; }
std::size_t Formula::size() const noexcept { return node_->size; }

bool operator==(const Formula& a, const Formula& b) noexcept {
  const Formula::Node* x = a.node_.get();
  const Formula::Node* y = b.node_.get();
  if (x == y) return true;
  if (x->hash != y->hash || x->kind != y->kind || x->size != y->size) return false;
  if (x->kind == Kind::Var) return x->name == y->name;
  for (std::size_t i = 0; i < x->children.size(); ++i) {
    if (!(x->children[i] == y->children[i])) return false;
  }
  return true;
}

Formula top() { return Formula::neg(Formula::bot()); }

Formula conj(const Formula& a, const Formula& b) {
  return Formula::neg(Formula::impl(a, Formula::neg(b)));
}

Formula disj(const Formula& a, const Formula& b) { return Formula::impl(Formula::neg(a), b); }

Formula iff(const Formula& a, const Formula& b) {
  return conj(Formula::impl(a, b), Formula::impl(b, a));
}

Formula diamond(const Formula& a) { return Formula::neg(Formula::box(Formula::neg(a))); }

Formula identity(const Formula& a, const Formula& b) { return Formula::box(iff(a, b)); }

Formula substitute(const Formula& chi, std::string_view x, const Formula& psi) {
  switch (chi.kind()) {
    case Kind::Var:
      return chi.name() == x ? psi : chi;
    case Kind::Bot:
      return chi;
    case Kind::Neg:
      return Formula::neg(substitute(chi.sub(), x, psi));
    case Kind::Impl:
      return Formula::impl(substitute(chi.left(), x, psi), substitute(chi.right(), x, psi));
    case Kind::Box:
      return Formula::box(substitute(chi.sub(), x, psi));
    case Kind::Know:
      return Formula::know(substitute(chi.sub(), x, psi));
    case Kind::Believe:
      return Formula::believe(substitute(chi.sub(), x, psi));
  }
  return chi;
}

void collect_variables(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Kind::Var:
      out.insert(f.name());
      return;
    case Kind::Bot:
      return;
    case Kind::Impl:
      collect_variables(f.left(), out);
      collect_variables(f.right(), out);
      return;
    default:
      collect_variables(f.sub(), out);
  }
}

std::set<std::string> variables(const Formula& f) {
  std::set<std::string> out;
  collect_variables(f, out);
  return out;
}

bool is_reserved_word(std::string_view word) {
  return word == "K" || word == "B" || word == "bot" || word == "top";
}

bool is_valid_variable_name(std::string_view name) {
  if (name.empty() || !(name.front() >= 'a' && name.front() <= 'z')) return false;
  if (is_reserved_word(name)) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

}  // namespace s5bke::syntax
