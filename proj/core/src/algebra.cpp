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

#include "s5bke/algebra.hpp"

#include <sstream>

#include "s5bke/frames.hpp"

namespace s5bke::algebra {

using syntax::Kind;

namespace {

const std::vector<Element>& table_of(const AlgebraicModel& m, Operator op) {
  return op == Operator::Know ? m.know : m.believe;
}

const char* filter_name(Operator op) { return op == Operator::Know ? "KNOW" : "BEL"; }

void check_shape(const AlgebraicModel& m) {
  if (m.atom_count == 0) throw MalformedTable("an algebra needs at least one atom");
  if (m.atom_count > kMaxAtoms) {
    throw SizeLimitExceeded("algebra has " + std::to_string(m.atom_count) + " atoms (limit " +
                            std::to_string(kMaxAtoms) + ")");
  }
  const std::size_t expected = m.element_count();
  for (Operator op : {Operator::Know, Operator::Believe}) {
    const auto& table = table_of(m, op);
    if (table.size() != expected) {
      throw MalformedTable(std::string(op == Operator::Know ? "K" : "B") + " table has " +
                           std::to_string(table.size()) + " entries, expected " +
                           std::to_string(expected));
    }
    for (Element e : table) {
      if (e > m.full()) {
        throw MalformedTable("table entry " + std::to_string(e) + " is not an element");
      }
    }
  }
}

void check_filter(const AlgebraicModel& m, Operator op, unsigned atom,
                  std::vector<Violation>& out) {
  const Element full = m.full();
  const auto member = [&](Element a) { return in_filter(m, op, atom, a); };

  if (!member(full)) out.push_back({Violation::Kind::TopMissing, atom, op, full, 0});
  if (member(0)) out.push_back({Violation::Kind::Improper, atom, op, 0, 0});

  bool upward_ok = true;
  for (Element a = 0; a <= full && upward_ok; ++a) {
    if (!member(a)) continue;
    for (unsigned j = 0; j < m.atom_count; ++j) {
      const Element bigger = a | (Element{1} << j);
      if (bigger != a && !member(bigger)) {
        out.push_back({Violation::Kind::NotUpwardClosed, atom, op, a, bigger});
        upward_ok = false;
        break;
      }
    }
  }

  // The running meet stays a member as long as no violation is found.
  std::optional<Element> running;
  for (Element b = 0; b <= full; ++b) {
    if (!member(b)) continue;
    if (!running) {
      running = b;
      continue;
    }
    const Element meet = *running & b;
    if (!member(meet)) {
      out.push_back({Violation::Kind::NotMeetClosed, atom, op, *running, b});
      break;
    }
    running = meet;
  }
}

}  // namespace

std::string Violation::describe() const {
  std::ostringstream os;
  const std::string filter =
      op ? std::string(filter_name(*op)) + "(U_" + std::to_string(atom) + ")" : std::string();
  switch (kind) {
    case Kind::TruePointOutOfRange:
      os << "true_point " << atom << " is not an atom index";
      break;
    case Kind::TopMissing:
      os << filter << " does not contain the top element " << a;
      break;
    case Kind::NotUpwardClosed:
      os << filter << " contains " << a << " but not its superset " << b;
      break;
    case Kind::NotMeetClosed:
      os << filter << " contains " << a << " and " << b << " but not their meet " << (a & b);
      break;
    case Kind::Improper:
      os << filter << " contains the bottom element 0";
      break;
    case Kind::NotFactive:
      os << filter << " contains " << a << ", which does not contain atom " << atom;
      break;
    case Kind::KnowNotInBelief:
      os << "KNOW(U_" << atom << ") contains " << a << " but BEL(U_" << atom << ") does not";
      break;
  }
  return os.str();
}

InvalidModel::InvalidModel(std::vector<Violation> violations)
    : std::runtime_error("invalid algebraic model: " +
                         (violations.empty() ? std::string("no violations")
                                             : violations.front().describe())),
      violations_(std::move(violations)) {}

bool in_filter(const AlgebraicModel& m, Operator op, unsigned atom, Element a) {
  return ((table_of(m, op)[a] >> atom) & 1U) != 0;
}

Element filter_core(const AlgebraicModel& m, Operator op, unsigned atom) {
  Element core = m.full();
  for (Element a = 0; a <= m.full(); ++a) {
    if (in_filter(m, op, atom, a)) core &= a;
  }
  return core;
}

std::vector<Violation> validate_algebra(const AlgebraicModel& m) {
  check_shape(m);
  std::vector<Violation> out;
  if (m.true_point >= m.atom_count) {
    out.push_back({Violation::Kind::TruePointOutOfRange, m.true_point, std::nullopt, 0, 0});
  }
  for (unsigned i = 0; i < m.atom_count; ++i) {
    check_filter(m, Operator::Know, i, out);
    check_filter(m, Operator::Believe, i, out);
    bool factive_reported = false;
    bool subset_reported = false;
    for (Element a = 0; a <= m.full(); ++a) {
      if (!in_filter(m, Operator::Know, i, a)) continue;
      if (!factive_reported && ((a >> i) & 1U) == 0) {
        out.push_back({Violation::Kind::NotFactive, i, Operator::Know, a, 0});
        factive_reported = true;
      }
      if (!subset_reported && !in_filter(m, Operator::Believe, i, a)) {
        out.push_back({Violation::Kind::KnowNotInBelief, i, Operator::Know, a, 0});
        subset_reported = true;
      }
    }
  }
  return out;
}

Element eval_algebra(const AlgebraicModel& m, const Assignment& g, const Formula& f) {
  const Element full = m.full();
  switch (f.kind()) {
    case Kind::Var: {
      const auto it = g.find(f.name());
      if (it == g.end()) throw UnboundVariable(f.name());
      return it->second & full;
    }
    case Kind::Bot:
      return 0;
    case Kind::Neg:
      return full & ~eval_algebra(m, g, f.sub());
    case Kind::Impl:
      return (full & ~eval_algebra(m, g, f.left())) | eval_algebra(m, g, f.right());
    case Kind::Box:
      return eval_algebra(m, g, f.sub()) == full ? full : 0;
    case Kind::Know:
      return m.know[eval_algebra(m, g, f.sub())];
    case Kind::Believe:
      return m.believe[eval_algebra(m, g, f.sub())];
  }
  return 0;
}

bool satisfies_algebra(const AlgebraicModel& m, const Assignment& g, const Formula& f) {
  return ((eval_algebra(m, g, f) >> m.true_point) & 1U) != 0;
}

std::vector<unsigned> ultrafilters(const AlgebraicModel& m) {
  std::vector<unsigned> out(m.atom_count);
  for (unsigned i = 0; i < m.atom_count; ++i) out[i] = i;
  return out;
}

frames::FrameModel algebra_to_frame(const AlgebraicModel& m, const Assignment& g) {
  auto violations = validate_algebra(m);
  if (!violations.empty()) throw InvalidModel(std::move(violations));
  frames::FrameModel km;
  km.frame.world_count = m.atom_count;
  km.frame.designated = m.true_point;
  for (unsigned w : ultrafilters(m)) {
    km.frame.core_k.push_back(filter_core(m, Operator::Know, w));
    km.frame.core_b.push_back(filter_core(m, Operator::Believe, w));
  }
  for (const auto& [name, element] : g) km.assignment.emplace(name, element);
  return km;
}

AlgebraicModel model_from_cores(unsigned atom_count, unsigned true_point,
                                std::span<const Element> core_k, std::span<const Element> core_b) {
  AlgebraicModel m;
  m.atom_count = atom_count;
  m.true_point = true_point;
  m.know.assign(m.element_count(), 0);
  m.believe.assign(m.element_count(), 0);
  for (Element a = 0; a <= m.full(); ++a) {
    for (unsigned i = 0; i < atom_count; ++i) {
      if ((a & core_k[i]) == core_k[i]) m.know[a] |= Element{1} << i;
      if ((a & core_b[i]) == core_b[i]) m.believe[a] |= Element{1} << i;
    }
  }
  return m;
}

std::optional<std::size_t> first_counterexample(std::span<const Interpretation> family,
                                                std::span<const Formula> premises,
                                                const Formula& goal) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& [model, g] = family[i];
    bool all = true;
    for (const Formula& p : premises) {
      if (!satisfies_algebra(model, g, p)) {
        all = false;
        break;
      }
    }
    if (all && !satisfies_algebra(model, g, goal)) return i;
  }
  return std::nullopt;
}

}  // namespace s5bke::algebra
