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

// Reference implementations used only by the tests. Each one is written
// from the definitions directly and shares no code with the library beyond
// the Formula accessors.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "s5bke/algebra.hpp"
#include "s5bke/formula.hpp"
#include "s5bke/frames.hpp"

namespace oracle {

using s5bke::syntax::Formula;
using s5bke::syntax::Kind;

inline std::string key(const Formula& f) {
  switch (f.kind()) {
    case Kind::Var:
      return "v:" + f.name();
    case Kind::Bot:
      return "0";
    case Kind::Neg:
      return "~(" + key(f.sub()) + ")";
    case Kind::Impl:
      return "(" + key(f.left()) + ">" + key(f.right()) + ")";
    case Kind::Box:
      return "[](" + key(f.sub()) + ")";
    case Kind::Know:
      return "K(" + key(f.sub()) + ")";
    case Kind::Believe:
      return "B(" + key(f.sub()) + ")";
  }
  return "?";
}

// Classical truth tables, one row at a time, over the modal-free skeleton.
inline void collect_atoms(const Formula& f, std::set<std::string>& atoms) {
  switch (f.kind()) {
    case Kind::Bot:
      return;
    case Kind::Neg:
      collect_atoms(f.sub(), atoms);
      return;
    case Kind::Impl:
      collect_atoms(f.left(), atoms);
      collect_atoms(f.right(), atoms);
      return;
    default:
      atoms.insert(key(f));
  }
}

inline bool truth_value(const Formula& f, const std::map<std::string, bool>& row) {
  switch (f.kind()) {
    case Kind::Bot:
      return false;
    case Kind::Neg:
      return !truth_value(f.sub(), row);
    case Kind::Impl:
      return !truth_value(f.left(), row) || truth_value(f.right(), row);
    default:
      return row.at(key(f));
  }
}

inline bool truth_table_tautology(const Formula& f) {
  std::set<std::string> atom_set;
  collect_atoms(f, atom_set);
  const std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << atoms.size()); ++bits) {
    std::map<std::string, bool> row;
    for (std::size_t i = 0; i < atoms.size(); ++i) row[atoms[i]] = ((bits >> i) & 1U) != 0;
    if (!truth_value(f, row)) return false;
  }
  return true;
}

// Neighborhood semantics with E_K(w), E_B(w) listed as explicit sets of
// propositions rather than principal cores.
struct NeighborhoodModel {
  std::size_t worlds;
  std::size_t designated;
  std::vector<std::set<std::uint64_t>> evidence_k;
  std::vector<std::set<std::uint64_t>> evidence_b;
  std::map<std::string, std::uint64_t> g;
};

inline NeighborhoodModel expand(const s5bke::frames::FrameModel& km) {
  const auto& fr = km.frame;
  NeighborhoodModel n{fr.world_count, fr.designated, {}, {}, km.assignment};
  const std::uint64_t all = (std::uint64_t{1} << fr.world_count) - 1;
  std::vector<std::uint64_t> props;
  if (fr.propositions) {
    props = *fr.propositions;
  } else {
    for (std::uint64_t a = 0; a <= all; ++a) props.push_back(a);
  }
  for (std::size_t w = 0; w < fr.world_count; ++w) {
    std::set<std::uint64_t> ek;
    std::set<std::uint64_t> eb;
    for (std::uint64_t a : props) {
      if ((a & fr.core_k[w]) == fr.core_k[w]) ek.insert(a);
      if ((a & fr.core_b[w]) == fr.core_b[w]) eb.insert(a);
    }
    n.evidence_k.push_back(ek);
    n.evidence_b.push_back(eb);
  }
  return n;
}

inline bool holds(const NeighborhoodModel& m, std::size_t w, const Formula& f);

inline std::uint64_t extension(const NeighborhoodModel& m, const Formula& f) {
  std::uint64_t out = 0;
  for (std::size_t v = 0; v < m.worlds; ++v) {
    if (holds(m, v, f)) out |= std::uint64_t{1} << v;
  }
  return out;
}

inline bool holds(const NeighborhoodModel& m, std::size_t w, const Formula& f) {
  switch (f.kind()) {
    case Kind::Var:
      return ((m.g.at(f.name()) >> w) & 1U) != 0;
    case Kind::Bot:
      return false;
    case Kind::Neg:
      return !holds(m, w, f.sub());
    case Kind::Impl:
      return !holds(m, w, f.left()) || holds(m, w, f.right());
    case Kind::Box:
      for (std::size_t v = 0; v < m.worlds; ++v) {
        if (!holds(m, v, f.sub())) return false;
      }
      return true;
    case Kind::Know:
      return m.evidence_k[w].count(extension(m, f.sub())) != 0;
    case Kind::Believe:
      return m.evidence_b[w].count(extension(m, f.sub())) != 0;
  }
  return false;
}

// Quadratic filter check straight from the definition: contains top,
// excludes bottom, closed upward and under pairwise meets.
inline bool is_proper_filter(const std::vector<bool>& member, std::uint32_t full) {
  if (!member[full] || member[0]) return false;
  for (std::uint32_t a = 0; a <= full; ++a) {
    if (!member[a]) continue;
    for (std::uint32_t b = 0; b <= full; ++b) {
      if ((a & b) == a && !member[b]) return false;
      if (member[b] && !member[a & b]) return false;
    }
  }
  return true;
}

inline bool algebra_is_valid(const s5bke::algebra::AlgebraicModel& m) {
  if (m.true_point >= m.atom_count) return false;
  const std::uint32_t full = (1U << m.atom_count) - 1;
  for (unsigned i = 0; i < m.atom_count; ++i) {
    std::vector<bool> know(full + 1);
    std::vector<bool> bel(full + 1);
    for (std::uint32_t a = 0; a <= full; ++a) {
      know[a] = ((m.know[a] >> i) & 1U) != 0;
      bel[a] = ((m.believe[a] >> i) & 1U) != 0;
    }
    if (!is_proper_filter(know, full) || !is_proper_filter(bel, full)) return false;
    for (std::uint32_t a = 0; a <= full; ++a) {
      if (know[a] && (((a >> i) & 1U) == 0 || !bel[a])) return false;
    }
  }
  return true;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Choices of (core_K, core_B) for one world of an n-world frame:
// core_K has the world plus any of the other n-1, core_B is a nonempty
// subset of core_K.
inline std::uint64_t per_world_choices(unsigned n) {
  std::uint64_t total = 0;
  for (unsigned k = 1; k <= n; ++k) total += binomial(n - 1, k - 1) * ((std::uint64_t{1} << k) - 1);
  return total;
}

inline std::uint64_t frames_with_worlds(unsigned n, unsigned variables, bool fixed_designated) {
  std::uint64_t total = fixed_designated ? 1 : n;
  for (unsigned w = 0; w < n; ++w) total *= per_world_choices(n);
  for (unsigned v = 0; v < variables; ++v) total <<= n;
  return total;
}

}  // namespace oracle
