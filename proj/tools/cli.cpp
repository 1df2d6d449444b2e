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

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "s5bke/algebra.hpp"
#include "s5bke/frames.hpp"
#include "s5bke/io.hpp"
#include "s5bke/kernel.hpp"
#include "s5bke/search.hpp"
#include "s5bke/selftest.hpp"
#include "s5bke/syntax.hpp"

namespace s5bke::cli {

using json = nlohmann::ordered_json;

namespace {

// Raised for anything that maps to exit code 2.
struct InputError {
  std::string message;
  std::vector<std::string> details;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot read '" + path + "'", {}};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

syntax::Formula parse_argument(const std::string& text, const std::string& what) {
  try {
    return syntax::parse(text);
  } catch (const syntax::ParseError& e) {
    const auto span = e.span();
    std::string marker(span.start, ' ');
    marker += std::string(std::max<std::size_t>(1, span.end - span.start), '^');
    throw InputError{what + ": " + e.what() + " at offset " + std::to_string(span.start),
                     {text, marker}};
  }
}

std::string file_position(const std::string& path, const io::FileFormatError& e) {
  std::string out = path;
  if (e.line() != 0) out += ":" + std::to_string(e.line());
  if (e.column() != 0) out += ":" + std::to_string(e.column());
  return out;
}

std::string set_string(std::uint64_t mask, std::size_t width) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < width; ++i) {
    if (((mask >> i) & 1U) == 0) continue;
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

std::string justification_text(const kernel::Justification& j) {
  kernel::Derivation one;
  one.lines.push_back({syntax::Formula::bot(), j});
  const std::string text = io::write_proof(one);
  const auto semi = text.find(';');
  return text.substr(semi + 2, text.size() - semi - 3);
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool machine = false;
};

int cmd_check_proof(Context& ctx, const std::string& path) {
  const std::string text = read_file(path);
  kernel::Derivation d;
  try {
    d = io::parse_proof(text);
  } catch (const io::FileFormatError& e) {
    throw InputError{file_position(path, e) + ": " + e.what(), {}};
  }
  const kernel::CheckVerdict verdict = kernel::check(d);
  const bool theorem = verdict.accepted() && d.premises.empty();
  if (ctx.machine) {
    json lines = json::array();
    for (std::size_t i = 1; i <= d.lines.size(); ++i) {
      const auto v = kernel::check_line(d, i);
      json row{{"line", i},
               {"formula", syntax::print(d.lines[i - 1].formula)},
               {"justification", justification_text(d.lines[i - 1].justification)},
               {"ok", v.accepted()}};
      if (!v.accepted()) {
        row["reason"] = kernel::reason_code(v.first_failure->reason);
        row["message"] = v.first_failure->message;
      }
      lines.push_back(row);
    }
    json doc{{"accepted", verdict.accepted()},
             {"conclusion", syntax::print(d.lines.back().formula)},
             {"theorem", theorem},
             {"lines", lines}};
    if (!verdict.accepted()) {
      doc["first_failure"] = {{"line", verdict.first_failure->line},
                              {"reason", kernel::reason_code(verdict.first_failure->reason)},
                              {"message", verdict.first_failure->message}};
    }
    ctx.out << doc.dump() << "\n";
  } else {
    for (std::size_t i = 1; i <= d.lines.size(); ++i) {
      const auto v = kernel::check_line(d, i);
      ctx.out << i << ". " << syntax::print(d.lines[i - 1].formula) << " ; "
              << justification_text(d.lines[i - 1].justification) << "  ";
      if (v.accepted()) {
        ctx.out << "ok\n";
      } else {
        ctx.out << "FAIL [" << kernel::reason_code(v.first_failure->reason) << "] "
                << v.first_failure->message << "\n";
      }
    }
    if (verdict.accepted()) {
      ctx.out << "accepted: " << (theorem ? "|- " : "premises |- ")
              << syntax::print(d.lines.back().formula) << "\n";
    } else {
      ctx.out << "rejected at line " << verdict.first_failure->line << ": "
              << verdict.first_failure->message << "\n";
    }
  }
  return verdict.accepted() ? kAccepted : kRejected;
}

template <typename Violations>
void require_valid(const Violations& violations, const std::string& what) {
  if (violations.empty()) return;
  InputError error{what + " fails validation", {}};
  for (const auto& v : violations) error.details.push_back(v.describe());
  throw error;
}

io::AlgebraFile load_algebra(const std::string& path) {
  const std::string text = read_file(path);
  io::AlgebraFile file;
  try {
    file = io::parse_algebra(text);
    require_valid(algebra::validate_algebra(file.model), "algebraic model '" + path + "'");
  } catch (const io::FileFormatError& e) {
    throw InputError{file_position(path, e) + ": " + e.what(), {}};
  } catch (const algebra::SizeLimitExceeded& e) {
    throw InputError{path + ": " + e.what(), {}};
  } catch (const algebra::MalformedTable& e) {
    throw InputError{path + ": " + e.what(), {}};
  }
  return file;
}

frames::FrameModel load_frame(const std::string& path) {
  const std::string text = read_file(path);
  frames::FrameModel km;
  try {
    km = io::parse_frame_model(text);
    require_valid(frames::validate_model(km), "frame model '" + path + "'");
  } catch (const io::FileFormatError& e) {
    throw InputError{file_position(path, e) + ": " + e.what(), {}};
  } catch (const frames::SizeLimitExceeded& e) {
    throw InputError{path + ": " + e.what(), {}};
  } catch (const frames::DuplicatePropositions& e) {
    throw InputError{path + ": " + e.what(), {}};
  }
  return km;
}

int cmd_eval(Context& ctx, const std::string& kind, const std::string& path,
             const std::string& formula_text, std::optional<std::size_t> at) {
  const syntax::Formula f = parse_argument(formula_text, "formula");
  if (kind == "algebra") {
    if (at) throw InputError{"--at only applies to frame models", {}};
    const io::AlgebraFile file = load_algebra(path);
    algebra::Element value = 0;
    try {
      value = algebra::eval_algebra(file.model, file.assignment, f);
    } catch (const algebra::UnboundVariable& e) {
      throw InputError{e.what(), {}};
    }
    const bool satisfied = ((value >> file.model.true_point) & 1U) != 0;
    if (ctx.machine) {
      ctx.out << json{{"kind", "algebra"},
                      {"formula", syntax::print(f)},
                      {"value", value},
                      {"true_point", file.model.true_point},
                      {"satisfied", satisfied}}
                     .dump()
              << "\n";
    } else {
      ctx.out << "formula: " << syntax::print(f) << "\n"
              << "value: " << value << " " << set_string(value, file.model.atom_count) << "\n"
              << "satisfied at TRUE (atom " << file.model.true_point
              << "): " << (satisfied ? "true" : "false") << "\n";
    }
    return satisfied ? kAccepted : kRejected;
  }

  const frames::FrameModel km = load_frame(path);
  const std::size_t world = at.value_or(km.frame.designated);
  if (world >= km.frame.world_count) {
    throw InputError{"world " + std::to_string(world) + " does not exist", {}};
  }
  frames::WorldSet truth = 0;
  bool satisfied = false;
  try {
    truth = frames::denote(km, f);
    satisfied = frames::satisfies_at(km, world, f);
  } catch (const frames::UnboundVariable& e) {
    throw InputError{e.what(), {}};
  }
  if (ctx.machine) {
    ctx.out << json{{"kind", "frame"},
                    {"formula", syntax::print(f)},
                    {"value", truth},
                    {"world", world},
                    {"satisfied", satisfied}}
                   .dump()
            << "\n";
  } else {
    ctx.out << "formula: " << syntax::print(f) << "\n"
            << "value: " << truth << " " << set_string(truth, km.frame.world_count) << "\n"
            << "satisfied at world " << world
            << (world == km.frame.designated ? " (designated)" : "") << ": "
            << (satisfied ? "true" : "false") << "\n";
  }
  return satisfied ? kAccepted : kRejected;
}

int cmd_countermodel(Context& ctx, const std::vector<std::string>& premise_texts,
                     const std::string& goal_text, search::SearchBounds bounds, unsigned threads) {
  std::vector<syntax::Formula> premises;
  for (const auto& p : premise_texts) premises.push_back(parse_argument(p, "premise"));
  const syntax::Formula goal = parse_argument(goal_text, "goal");
  const search::CountermodelReport report = [&] {
    try {
      return search::find_countermodel(premises, goal, bounds, threads);
    } catch (const search::GuardViolation& e) {
      throw InputError{e.what(), {}};
    }
  }();

  if (const auto* found = std::get_if<search::Found>(&report.verdict)) {
    if (ctx.machine) {
      json rows = json::array();
      for (const auto& row : found->trace) {
        rows.push_back({{"world", row.world}, {"premises", row.premises}, {"goal", row.goal}});
      }
      ctx.out << json{{"verdict", "found"},
                      {"index", found->index},
                      {"model", io::frame_model_to_json(found->model)},
                      {"trace", rows}}
                     .dump()
              << "\n";
    } else {
      ctx.out << "countermodel found (enumeration index " << found->index << ")\n"
              << io::write_frame_model(found->model) << "trace:\n";
      for (const auto& row : found->trace) {
        ctx.out << "  world " << row.world
                << (row.world == found->model.frame.designated ? "*" : " ");
        for (std::size_t i = 0; i < row.premises.size(); ++i) {
          ctx.out << " premise" << (i + 1) << "=" << (row.premises[i] ? 1 : 0);
        }
        ctx.out << " goal=" << (row.goal ? 1 : 0) << "\n";
      }
    }
    return kRejected;
  }
  const auto& unknown = std::get<search::UnknownWithinBounds>(report.verdict);
  if (ctx.machine) {
    ctx.out << json{{"verdict", "unknown_within_bounds"},
                    {"models_examined", unknown.models_examined},
                    {"max_worlds", bounds.max_worlds}}
                   .dump()
            << "\n";
  } else {
    ctx.out << "unknown within bounds: no countermodel among " << unknown.models_examined
            << " models with at most " << bounds.max_worlds << " worlds\n";
  }
  return kAccepted;
}

int cmd_translate(Context& ctx, const std::string& path, const std::optional<std::string>& verify) {
  const io::AlgebraFile file = load_algebra(path);
  std::optional<syntax::Formula> f;
  if (verify) f = parse_argument(*verify, "--verify formula");
  const frames::FrameModel km = algebra::algebra_to_frame(file.model, file.assignment);

  int status = kAccepted;
  json check;
  if (f) {
    bool in_algebra = false;
    bool in_frame = false;
    try {
      in_algebra = algebra::satisfies_algebra(file.model, file.assignment, *f);
      in_frame = frames::models(km, *f);
    } catch (const algebra::UnboundVariable& e) {
      throw InputError{e.what(), {}};
    }
    check = {{"formula", syntax::print(*f)},
             {"algebra", in_algebra},
             {"frame", in_frame},
             {"agree", in_algebra == in_frame}};
    status = in_algebra == in_frame ? kAccepted : kRejected;
  }
  if (ctx.machine) {
    json doc{{"frame", io::frame_model_to_json(km)}};
    if (f) doc["verify"] = check;
    ctx.out << doc.dump() << "\n";
  } else {
    ctx.out << io::write_frame_model(km);
    if (f) {
      ctx.err << "verify " << syntax::print(*f) << ": algebra="
              << (check["algebra"].get<bool>() ? "true" : "false")
              << " frame=" << (check["frame"].get<bool>() ? "true" : "false")
              << (status == kAccepted ? " (agree)" : " (DISAGREE)") << "\n";
    }
  }
  return status;
}

int cmd_selftest(Context& ctx) {
  const selftest::Report report = selftest::run();
  if (ctx.machine) {
    json checks = json::array();
    for (const auto& c : report.checks) {
      json row{{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
      if (!c.passed) row["failure"] = c.first_failure;
      checks.push_back(row);
    }
    ctx.out << json{{"passed", report.passed()}, {"checks", checks}}.dump() << "\n";
  } else {
    ctx.out << selftest::summary(report);
  }
  return report.passed() ? kAccepted : kRejected;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Workbench for the logic of evidence, knowledge and belief"};
  app.require_subcommand(1);
  Context ctx{out, err};
  app.add_flag("--machine", ctx.machine, "Emit JSON instead of text");

  std::string path;
  auto* check_proof = app.add_subcommand("check-proof", "Check a Hilbert-style derivation");
  check_proof->add_option("FILE", path, "Proof file")->required();
  check_proof->add_flag("--machine", ctx.machine, "Emit JSON instead of text");

  std::string kind;
  std::string formula;
  std::optional<std::size_t> at;
  auto* eval = app.add_subcommand("eval", "Evaluate a formula in a model file");
  eval->add_option("--kind", kind, "Model kind")
      ->required()
      ->check(CLI::IsMember({"algebra", "frame"}));
  eval->add_option("FILE", path, "Model file")->required();
  eval->add_option("FORMULA", formula, "Formula")->required();
  eval->add_option("--at", at, "World to evaluate at (frames only)");
  eval->add_flag("--machine", ctx.machine, "Emit JSON instead of text");

  std::vector<std::string> premises;
  search::SearchBounds bounds;
  unsigned threads = 1;
  auto* countermodel = app.add_subcommand("countermodel", "Search for a refuting frame model");
  countermodel->add_option("--premise", premises, "Premise formula (repeatable)");
  countermodel->add_option("--max-worlds", bounds.max_worlds, "Largest frame to try")
      ->check(CLI::Range(std::size_t{1}, search::kMaxExhaustiveWorlds));
  countermodel->add_option("--max-variables", bounds.max_variables, "Variable guard");
  countermodel->add_option("--threads", threads, "Worker threads (0 = all cores)");
  countermodel->add_option("GOAL", formula, "Goal formula")->required();
  countermodel->add_flag("--machine", ctx.machine, "Emit JSON instead of text");

  std::optional<std::string> verify;
  auto* translate = app.add_subcommand("translate", "Translate an algebraic model to a frame");
  translate->add_option("FILE", path, "Algebraic model file")->required();
  translate->add_option("--verify", verify, "Check that both models agree on a formula");
  translate->add_flag("--machine", ctx.machine, "Emit JSON instead of text");

  auto* self = app.add_subcommand("selftest", "Run the exhaustive small-model suites");
  self->add_flag("--machine", ctx.machine, "Emit JSON instead of text");

  std::vector<const char*> argv{"s5bke"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAccepted;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kAccepted;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kInputError;
  }

  try {
    if (*check_proof) return cmd_check_proof(ctx, path);
    if (*eval) return cmd_eval(ctx, kind, path, formula, at);
    if (*countermodel) return cmd_countermodel(ctx, premises, formula, bounds, threads);
    if (*translate) return cmd_translate(ctx, path, verify);
    if (*self) return cmd_selftest(ctx);
  } catch (const InputError& e) {
    if (ctx.machine) {
      out << json{{"error", e.message}, {"details", e.details}}.dump() << "\n";
    }
    err << "error: " << e.message << "\n";
    for (const auto& d : e.details) err << "  " << d << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace s5bke::cli
