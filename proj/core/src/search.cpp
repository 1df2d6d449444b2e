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

#include "s5bke/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <set>
#include <thread>

namespace s5bke::search {

using syntax::Kind;

namespace {

constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 62;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kMaxEnumeration / a) {
    throw GuardViolation("enumeration space exceeds 2^62 models");
  }
  return a * b;
}

// Frame model in fixed-size form for the search loop.
struct Compact {
  std::size_t worlds = 0;
  std::size_t designated = 0;
  WorldSet all = 0;
  std::array<WorldSet, kMaxExhaustiveWorlds> core_k{};
  std::array<WorldSet, kMaxExhaustiveWorlds> core_b{};
  std::vector<WorldSet> values;
};

// Postfix program over truth sets with variables resolved to indices.
class Program {
 public:
  Program(const Formula& f, const std::vector<std::string>& variables) {
    compile(f, variables);
  }

  WorldSet run(const Compact& km, std::vector<WorldSet>& stack) const {
    stack.clear();
    for (const Op& op : ops_) {
      switch (op.kind) {
        case Kind::Var:
          stack.push_back(km.values[op.variable]);
          break;
        case Kind::Bot:
          stack.push_back(0);
          break;
        case Kind::Neg:
          stack.back() = km.all & ~stack.back();
          break;
        case Kind::Impl: {
          const WorldSet rhs = stack.back();
          stack.pop_back();
          stack.back() = (km.all & ~stack.back()) | rhs;
          break;
        }
        case Kind::Box:
          stack.back() = stack.back() == km.all ? km.all : 0;
          break;
        case Kind::Know:
        case Kind::Believe: {
          const auto& cores = op.kind == Kind::Know ? km.core_k : km.core_b;
          const WorldSet a = stack.back();
          WorldSet out = 0;
          for (std::size_t w = 0; w < km.worlds; ++w) {
            if ((a & cores[w]) == cores[w]) out |= WorldSet{1} << w;
          }
          stack.back() = out;
          break;
        }
      }
    }
    return stack.back();
  }

 private:
  struct Op {
    Kind kind;
    std::size_t variable = 0;
  };

  void compile(const Formula& f, const std::vector<std::string>& variables) {
    switch (f.kind()) {
      case Kind::Var: {
        const auto it = std::find(variables.begin(), variables.end(), f.name());
        ops_.push_back({Kind::Var, static_cast<std::size_t>(it - variables.begin())});
        return;
      }
      case Kind::Bot:
        ops_.push_back({Kind::Bot});
        return;
      case Kind::Impl:
        compile(f.left(), variables);
        compile(f.right(), variables);
        ops_.push_back({Kind::Impl});
        return;
      default:
        compile(f.sub(), variables);
        ops_.push_back({f.kind()});
    }
  }

  std::vector<Op> ops_;
};

}  // namespace

std::vector<std::pair<WorldSet, WorldSet>> FrameEnumerator::core_choices(std::size_t n,
                                                                         std::size_t w) {
  std::vector<std::pair<WorldSet, WorldSet>> out;
  const WorldSet all = (WorldSet{1} << n) - 1;
  const WorldSet self = WorldSet{1} << w;
  for (WorldSet ck = 1; ck <= all; ++ck) {
    if ((ck & self) == 0) continue;
    for (WorldSet cb = 1; cb <= all; ++cb) {
      if ((cb & ~ck) == 0) out.emplace_back(ck, cb);
    }
  }
  return out;
}

FrameEnumerator::FrameEnumerator(SearchBounds bounds, std::vector<std::string> variables)
    : variables_(std::move(variables)) {
  if (bounds.max_worlds == 0 || bounds.max_worlds > kMaxExhaustiveWorlds) {
    throw GuardViolation("exhaustive enumeration needs 1 <= max_worlds <= " +
                         std::to_string(kMaxExhaustiveWorlds));
  }
  if (variables_.size() > bounds.max_variables) {
    throw GuardViolation(std::to_string(variables_.size()) + " variables exceed max_variables = " +
                         std::to_string(bounds.max_variables));
  }
  for (std::size_t n = 1; n <= bounds.max_worlds; ++n) {
    Block block;
    block.worlds = n;
    block.first = total_;
    std::uint64_t cores = 1;
    for (std::size_t w = 0; w < n; ++w) {
      block.choices.push_back(core_choices(n, w));
      cores = checked_mul(cores, block.choices.back().size());
    }
    block.assignments = 1;
    for (std::size_t v = 0; v < variables_.size(); ++v) {
      block.assignments = checked_mul(block.assignments, std::uint64_t{1} << n);
    }
    block.per_designated = checked_mul(cores, block.assignments);
    block.size = checked_mul(block.per_designated, n);
    total_ += block.size;
    if (total_ > kMaxEnumeration) throw GuardViolation("enumeration space exceeds 2^62 models");
    blocks_.push_back(std::move(block));
  }
}

const FrameEnumerator::Block& FrameEnumerator::block_of(std::uint64_t index) const {
  for (const Block& b : blocks_) {
    if (index < b.first + b.size) return b;
  }
  throw std::out_of_range("enumeration index " + std::to_string(index) + " out of range");
}

namespace {

void decode_into(std::uint64_t local, std::size_t n, std::uint64_t per_designated,
                 std::uint64_t assignments,
                 const std::vector<std::vector<std::pair<WorldSet, WorldSet>>>& choices,
                 std::size_t variable_count, Compact& out) {
  out.worlds = n;
  out.all = (WorldSet{1} << n) - 1;
  out.designated = static_cast<std::size_t>(local / per_designated);
  const std::uint64_t rest = local % per_designated;
  std::uint64_t core_code = rest / assignments;
  std::uint64_t value_code = rest % assignments;
  for (std::size_t w = n; w-- > 0;) {
    const auto& options = choices[w];
    const auto& [ck, cb] = options[core_code % options.size()];
    core_code /= options.size();
    out.core_k[w] = ck;
    out.core_b[w] = cb;
  }
  out.values.resize(variable_count);
  for (std::size_t v = variable_count; v-- > 0;) {
    out.values[v] = value_code & out.all;
    value_code >>= n;
  }
}

FrameModel expand(const Compact& c, const std::vector<std::string>& variables) {
  FrameModel km;
  km.frame.world_count = c.worlds;
  km.frame.designated = c.designated;
  km.frame.core_k.assign(c.core_k.begin(), c.core_k.begin() + static_cast<long>(c.worlds));
  km.frame.core_b.assign(c.core_b.begin(), c.core_b.begin() + static_cast<long>(c.worlds));
  for (std::size_t v = 0; v < variables.size(); ++v) km.assignment[variables[v]] = c.values[v];
  return km;
}

}  // namespace

FrameModel FrameEnumerator::at(std::uint64_t index) const {
  const Block& b = block_of(index);
  Compact c;
  decode_into(index - b.first, b.worlds, b.per_designated, b.assignments, b.choices,
              variables_.size(), c);
  return expand(c, variables_);
}

void FrameEnumerator::for_each(
    const std::function<bool(std::uint64_t, const FrameModel&)>& visit) const {
  for (std::uint64_t i = 0; i < total_; ++i) {
    if (!visit(i, at(i))) return;
  }
}

std::vector<FrameModel> FrameEnumerator::collect() const {
  std::vector<FrameModel> out;
  out.reserve(static_cast<std::size_t>(total_));
  for_each([&](std::uint64_t, const FrameModel& km) {
    out.push_back(km);
    return true;
  });
  return out;
}

std::vector<FrameModel> enumerate_frames(SearchBounds bounds,
                                         const std::vector<std::string>& variables) {
  return FrameEnumerator(bounds, variables).collect();
}

std::vector<TraceRow> trace(const FrameModel& km, const std::vector<Formula>& premises,
                            const Formula& goal) {
  std::vector<TraceRow> rows;
  for (std::size_t w = 0; w < km.frame.world_count; ++w) {
    TraceRow row{w, {}, frames::satisfies_at(km, w, goal)};
    for (const Formula& p : premises) row.premises.push_back(frames::satisfies_at(km, w, p));
    rows.push_back(std::move(row));
  }
  return rows;
}

CountermodelReport find_countermodel(const std::vector<Formula>& premises, const Formula& goal,
                                     SearchBounds bounds, unsigned threads) {
  std::set<std::string> names;
  for (const Formula& p : premises) syntax::collect_variables(p, names);
  syntax::collect_variables(goal, names);
  const FrameEnumerator enumerator(bounds, std::vector<std::string>(names.begin(), names.end()));
  const auto& variables = enumerator.variables();

  std::vector<Program> premise_programs;
  for (const Formula& p : premises) premise_programs.emplace_back(p, variables);
  const Program goal_program(goal, variables);

  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{kNone};

  const auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
    Compact c;
    std::vector<WorldSet> stack;
    std::uint64_t i = lo;
    while (i < hi) {
      const FrameEnumerator::Block& b = enumerator.block_of(i);
      const std::uint64_t block_end = std::min(hi, b.first + b.size);
      for (; i < block_end; ++i) {
        if (i >= best.load(std::memory_order_relaxed)) return;
        decode_into(i - b.first, b.worlds, b.per_designated, b.assignments, b.choices,
                    variables.size(), c);
        const WorldSet here = WorldSet{1} << c.designated;
        bool premises_hold = true;
        for (const Program& p : premise_programs) {
          if ((p.run(c, stack) & here) == 0) {
            premises_hold = false;
            break;
          }
        }
        if (!premises_hold || (goal_program.run(c, stack) & here) != 0) continue;
        std::uint64_t current = best.load();
        while (i < current && !best.compare_exchange_weak(current, i)) {
        }
        return;
      }
    }
  };

  const std::uint64_t total = enumerator.count();
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  if (threads <= 1 || total < 4096) {
    scan(0, total);
  } else {
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t lo = std::min(total, chunk * t);
      const std::uint64_t hi = std::min(total, lo + chunk);
      workers.emplace_back(scan, lo, hi);
    }
    for (auto& worker : workers) worker.join();
  }

  CountermodelReport report{premises, goal, UnknownWithinBounds{total}};
  if (const std::uint64_t index = best.load(); index != kNone) {
    FrameModel km = enumerator.at(index);
    auto rows = trace(km, premises, goal);
    report.verdict = Found{std::move(km), index, std::move(rows)};
  }
  return report;
}

FrameModel random_model(Rng& rng, std::size_t max_worlds,
                        const std::vector<std::string>& variables) {
  if (max_worlds == 0 || max_worlds > frames::kMaxFullWorlds) {
    throw GuardViolation("random models need 1 <= max_worlds <= " +
                         std::to_string(frames::kMaxFullWorlds));
  }
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_worlds)(rng);
  const WorldSet all = (WorldSet{1} << n) - 1;
  FrameModel km;
  km.frame.world_count = n;
  km.frame.designated = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  for (std::size_t w = 0; w < n; ++w) {
    const WorldSet ck = (WorldSet{1} << w) | (rng() & all);
    WorldSet cb = 0;
    while (cb == 0) cb = rng() & ck;
    km.frame.core_k.push_back(ck);
    km.frame.core_b.push_back(cb);
  }
  for (const auto& v : variables) km.assignment[v] = rng() & all;
  return km;
}

FrameModel random_model(std::uint64_t seed, SearchBounds bounds,
                        const std::vector<std::string>& variables) {
  Rng rng(seed);
  return random_model(rng, bounds.max_worlds, variables);
}

Formula random_formula(Rng& rng, int depth, const std::vector<std::string>& variables) {
  if (depth < 0 || depth > kMaxRandomDepth) {
    throw GuardViolation("random formula depth must be in [0, " +
                         std::to_string(kMaxRandomDepth) + "]");
  }
  const auto leaf = [&]() {
    const std::size_t pick =
        std::uniform_int_distribution<std::size_t>(0, variables.size())(rng);
    return pick == variables.size() ? Formula::bot() : Formula::var(variables[pick]);
  };
  if (depth == 0 || std::uniform_int_distribution<int>(0, 4)(rng) == 0) return leaf();
  switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
    case 0:
      return Formula::neg(random_formula(rng, depth - 1, variables));
    case 1: {
      Formula lhs = random_formula(rng, depth - 1, variables);
      return Formula::impl(std::move(lhs), random_formula(rng, depth - 1, variables));
    }
    case 2:
      return Formula::box(random_formula(rng, depth - 1, variables));
    case 3:
      return Formula::know(random_formula(rng, depth - 1, variables));
    default:
      return Formula::believe(random_formula(rng, depth - 1, variables));
  }
}

Formula random_formula(std::uint64_t seed, int depth, const std::vector<std::string>& variables) {
  Rng rng(seed);
  return random_formula(rng, depth, variables);
}

namespace {

// Propositional tautologies over metavariables p, q, r.
Formula tautology_template(int which, const Formula& p, const Formula& q, const Formula& r) {
  using syntax::conj;
  using syntax::disj;
  using syntax::iff;
  const auto imp = [](const Formula& a, const Formula& b) { return Formula::impl(a, b); };
  const auto neg = [](const Formula& a) { return Formula::neg(a); };
  switch (which) {
    case 0:
      return imp(p, p);
    case 1:
      return imp(p, imp(q, p));
    case 2:
      return imp(imp(p, imp(q, r)), imp(imp(p, q), imp(p, r)));
    case 3:
      return imp(imp(neg(p), neg(q)), imp(q, p));
    case 4:
      return imp(neg(neg(p)), p);
    case 5:
      return imp(p, neg(neg(p)));
    case 6:
      return disj(p, neg(p));
    case 7:
      return imp(conj(p, q), p);
    case 8:
      return imp(p, disj(p, q));
    case 9:
      return imp(Formula::bot(), p);
    case 10:
      return imp(imp(imp(p, q), p), p);
    case 11:
      return iff(p, p);
    default:
      return imp(imp(p, q), imp(imp(q, r), imp(p, r)));
  }
}

constexpr int kTautologyTemplates = 13;

}  // namespace

Formula random_axiom_instance(Rng& rng, kernel::SchemeId scheme, int depth,
                              const std::vector<std::string>& variables) {
  using kernel::SchemeId;
  const Formula p = random_formula(rng, depth, variables);
  const Formula q = random_formula(rng, depth, variables);
  const auto imp = [](const Formula& a, const Formula& b) { return Formula::impl(a, b); };
  switch (scheme) {
    case SchemeId::CL: {
      const Formula r = random_formula(rng, depth, variables);
      const int which = std::uniform_int_distribution<int>(0, kTautologyTemplates - 1)(rng);
      return tautology_template(which, p, q, r);
    }
    case SchemeId::K_FACT:
      return imp(Formula::know(p), p);
    case SchemeId::K_TO_B:
      return imp(Formula::know(p), Formula::believe(p));
    case SchemeId::BOX_4:
      return imp(Formula::box(p), Formula::box(Formula::box(p)));
    case SchemeId::BOX_5:
      return imp(Formula::neg(Formula::box(p)), Formula::box(Formula::neg(Formula::box(p))));
    case SchemeId::BOX_TO_K:
      return imp(Formula::box(p), Formula::know(p));
    case SchemeId::K_DIST:
      return imp(Formula::know(imp(p, q)), imp(Formula::know(p), Formula::know(q)));
    case SchemeId::B_DIST:
      return imp(Formula::believe(imp(p, q)), imp(Formula::believe(p), Formula::believe(q)));
    case SchemeId::BOX_DIST:
      return imp(Formula::box(imp(p, q)), imp(Formula::box(p), Formula::box(q)));
    case SchemeId::B_CONS:
      return Formula::neg(Formula::believe(Formula::bot()));
  }
  return p;
}

algebra::AlgebraicModel random_algebra(Rng& rng, unsigned max_atoms) {
  if (max_atoms == 0 || max_atoms > algebra::kMaxAtoms) {
    throw GuardViolation("random algebras need 1 <= max_atoms <= " +
                         std::to_string(algebra::kMaxAtoms));
  }
  const unsigned n = std::uniform_int_distribution<unsigned>(1, max_atoms)(rng);
  const algebra::Element full = (algebra::Element{1} << n) - 1;
  std::vector<algebra::Element> core_k(n);
  std::vector<algebra::Element> core_b(n);
  for (unsigned i = 0; i < n; ++i) {
    core_k[i] = (algebra::Element{1} << i) | (static_cast<algebra::Element>(rng()) & full);
    while (core_b[i] == 0) core_b[i] = static_cast<algebra::Element>(rng()) & core_k[i];
  }
  const unsigned point = std::uniform_int_distribution<unsigned>(0, n - 1)(rng);
  return algebra::model_from_cores(n, point, core_k, core_b);
}

algebra::Assignment random_algebra_assignment(Rng& rng, const algebra::AlgebraicModel& m,
                                              const std::vector<std::string>& variables) {
  algebra::Assignment g;
  for (const auto& v : variables) g[v] = static_cast<algebra::Element>(rng()) & m.full();
  return g;
}

}  // namespace s5bke::search
