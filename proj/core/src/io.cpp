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

#include "s5bke/io.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <vector>

#include "s5bke/syntax.hpp"

namespace s5bke::io {

using json = nlohmann::ordered_json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
  return s;
}

std::size_t leading_space(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])) != 0) ++i;
  return i;
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])) != 0) ++i;
    const std::size_t start = i;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])) == 0) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

bool parse_index(std::string_view word, std::size_t& out) {
  if (word.empty() || word.size() > 9) return false;
  std::size_t v = 0;
  for (char c : word) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  out = v;
  return true;
}

bool is_premise_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c)) == 0 && c != '_') return false;
  }
  return true;
}

// Parses a formula embedded at `column` (0-based) of a file line.
syntax::Formula parse_embedded(std::string_view text, std::size_t line, std::size_t column) {
  try {
    return syntax::parse(text);
  } catch (const syntax::ParseError& e) {
    throw FileFormatError(e.what(), line, column + e.span().start + 1);
  }
}

kernel::Justification parse_justification(std::string_view text, std::size_t line,
                                          std::size_t column) {
  const auto words = split_words(text);
  const auto bad = [&](const std::string& why) -> FileFormatError {
    return FileFormatError("bad justification '" + std::string(trim(text)) + "': " + why, line,
                           column + 1);
  };
  if (words.empty()) throw bad("missing");
  const std::string_view tag = words[0];
  if (tag == "prem") {
    if (words.size() != 2 || !is_premise_name(words[1])) throw bad("expected 'prem NAME'");
    return kernel::just::Premise{std::string(words[1])};
  }
  if (tag == "ax") {
    if (words.size() != 2) throw bad("expected 'ax SCHEME'");
    const auto scheme = kernel::scheme_from_name(words[1]);
    if (!scheme) throw bad("unknown axiom scheme '" + std::string(words[1]) + "'");
    return kernel::just::Axiom{*scheme};
  }
  if (tag == "mp") {
    std::size_t i = 0;
    std::size_t j = 0;
    if (words.size() != 3 || !parse_index(words[1], i) || !parse_index(words[2], j)) {
      throw bad("expected 'mp I J'");
    }
    return kernel::just::MP{i, j};
  }
  if (tag == "an") {
    std::size_t i = 0;
    if (words.size() != 2 || !parse_index(words[1], i)) throw bad("expected 'an I'");
    return kernel::just::AN{i};
  }
  throw bad("expected prem, ax, mp or an");
}

std::string justification_text(const kernel::Justification& j) {
  struct Visitor {
    std::string operator()(const kernel::just::Premise& p) const { return "prem " + p.name; }
    std::string operator()(const kernel::just::Axiom& a) const {
      return "ax " + std::string(kernel::scheme_name(a.scheme));
    }
    std::string operator()(const kernel::just::MP& m) const {
      return "mp " + std::to_string(m.minor) + " " + std::to_string(m.major);
    }
    std::string operator()(const kernel::just::AN& a) const {
      return "an " + std::to_string(a.source);
    }
  };
  return std::visit(Visitor{}, j);
}

// Line/column of a byte offset.
std::pair<std::size_t, std::size_t> position_of(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

json parse_json_document(std::string_view text) {
  const std::string cleaned = strip_comments(text);
  try {
    return json::parse(cleaned);
  } catch (const json::parse_error& e) {
    const auto [line, column] = position_of(cleaned, e.byte == 0 ? 0 : e.byte - 1);
    throw FileFormatError(std::string("malformed JSON: ") + e.what(), line, column);
  }
}

FileFormatError schema_error(const std::string& message) { return FileFormatError(message, 0, 0); }

void reject_unknown_keys(const json& doc, const std::set<std::string>& allowed) {
  if (!doc.is_object()) throw schema_error("model file must contain a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (allowed.count(key) == 0) throw schema_error("unknown key '" + key + "'");
  }
}

const json& require(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw schema_error(std::string("missing key '") + key + "'");
  return *it;
}

std::uint64_t as_unsigned(const json& value, const std::string& what) {
  if (!value.is_number_unsigned()) throw schema_error(what + " must be a nonnegative integer");
  return value.get<std::uint64_t>();
}

std::vector<std::uint64_t> as_unsigned_list(const json& value, const std::string& what) {
  if (!value.is_array()) throw schema_error(what + " must be an array of integers");
  std::vector<std::uint64_t> out;
  for (const auto& item : value) out.push_back(as_unsigned(item, what + " entry"));
  return out;
}

template <typename Mask>
std::map<std::string, Mask> as_assignment(const json& value) {
  if (!value.is_object()) throw schema_error("assignment must be an object");
  std::map<std::string, Mask> out;
  for (const auto& [name, mask] : value.items()) {
    if (!syntax::is_valid_variable_name(name)) {
      throw schema_error("'" + name + "' is not a valid variable name");
    }
    out.emplace(name, static_cast<Mask>(as_unsigned(mask, "assignment of '" + name + "'")));
  }
  return out;
}

}  // namespace

std::string strip_comments(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool in_string = false;
  bool escaped = false;
  bool in_comment = false;
  for (char c : text) {
    if (in_comment) {
      if (c == '\n') {
        in_comment = false;
        out += c;
      }
      continue;
    }
    if (in_string) {
      if (escaped) {
        escaped = false;
      } else if (c == '\\') {
        escaped = true;
      } else if (c == '"') {
        in_string = false;
      }
      out += c;
      continue;
    }
    if (c == '#') {
      in_comment = true;
      continue;
    }
    if (c == '"') in_string = true;
    out += c;
  }
  return out;
}

kernel::Derivation parse_proof(std::string_view text) {
  enum class Section { None, Premises, Proof } section = Section::None;
  kernel::Derivation d;
  bool saw_proof = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string_view body = trim(raw);
    if (body.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t indent = leading_space(raw);

    if (body == "premises:") {
      if (section != Section::None) {
        throw FileFormatError("'premises:' must come before 'proof:'", line_no, indent + 1);
      }
      section = Section::Premises;
    } else if (body == "proof:") {
      if (saw_proof) throw FileFormatError("duplicate 'proof:' header", line_no, indent + 1);
      section = Section::Proof;
      saw_proof = true;
    } else if (section == Section::Premises) {
      const std::size_t colon = raw.find(':');
      if (colon == std::string_view::npos) {
        throw FileFormatError("expected 'name: formula'", line_no, indent + 1);
      }
      const std::string name(trim(raw.substr(0, colon)));
      if (!is_premise_name(name)) {
        throw FileFormatError("bad premise name '" + name + "'", line_no, indent + 1);
      }
      if (d.premises.count(name) != 0) {
        throw FileFormatError("duplicate premise '" + name + "'", line_no, indent + 1);
      }
      d.premises.emplace(name, parse_embedded(raw.substr(colon + 1), line_no, colon + 1));
    } else if (section == Section::Proof) {
      const std::size_t dot = raw.find('.');
      std::size_t number = 0;
      if (dot == std::string_view::npos || !parse_index(trim(raw.substr(0, dot)), number)) {
        throw FileFormatError("expected 'N. formula ; justification'", line_no, indent + 1);
      }
      if (number != d.lines.size() + 1) {
        throw FileFormatError("expected line number " + std::to_string(d.lines.size() + 1) +
                                  ", found " + std::to_string(number),
                              line_no, indent + 1);
      }
      const std::size_t semi = raw.find(';', dot);
      if (semi == std::string_view::npos) {
        throw FileFormatError("missing '; justification'", line_no, raw.size());
      }
      syntax::Formula f =
          parse_embedded(raw.substr(dot + 1, semi - dot - 1), line_no, dot + 1);
      kernel::Justification j = parse_justification(raw.substr(semi + 1), line_no, semi + 1);
      d.lines.push_back({std::move(f), std::move(j)});
    } else {
      throw FileFormatError("expected 'premises:' or 'proof:' header", line_no, indent + 1);
    }
    if (end == text.size()) break;
  }
  if (!saw_proof) throw FileFormatError("missing 'proof:' section", line_no, 0);
  if (d.lines.empty()) throw FileFormatError("proof has no lines", line_no, 0);
  return d;
}

std::string write_proof(const kernel::Derivation& d) {
  std::ostringstream os;
  if (!d.premises.empty()) {
    os << "premises:\n";
    for (const auto& [name, f] : d.premises) os << name << ": " << syntax::print(f) << "\n";
  }
  os << "proof:\n";
  for (std::size_t i = 0; i < d.lines.size(); ++i) {
    os << (i + 1) << ". " << syntax::print(d.lines[i].formula) << " ; "
       << justification_text(d.lines[i].justification) << "\n";
  }
  return os.str();
}

AlgebraFile parse_algebra(std::string_view text) {
  const json doc = parse_json_document(text);
  reject_unknown_keys(doc, {"atoms", "true_point", "K", "B", "assignment"});
  AlgebraFile file;
  const std::uint64_t atoms = as_unsigned(require(doc, "atoms"), "atoms");
  if (atoms == 0) throw schema_error("atoms must be positive");
  if (atoms > algebra::kMaxAtoms) {
    throw algebra::SizeLimitExceeded("algebra has " + std::to_string(atoms) + " atoms (limit " +
                                     std::to_string(algebra::kMaxAtoms) + ")");
  }
  file.model.atom_count = static_cast<unsigned>(atoms);
  file.model.true_point =
      static_cast<unsigned>(as_unsigned(require(doc, "true_point"), "true_point"));
  for (const auto* key : {"K", "B"}) {
    auto& table = std::string(key) == "K" ? file.model.know : file.model.believe;
    for (std::uint64_t v : as_unsigned_list(require(doc, key), std::string(key) + " table")) {
      if (v > file.model.full()) {
        throw schema_error(std::string(key) + " table entry " + std::to_string(v) +
                           " is not an element of the algebra");
      }
      table.push_back(static_cast<algebra::Element>(v));
    }
  }
  if (const auto it = doc.find("assignment"); it != doc.end()) {
    file.assignment = as_assignment<algebra::Element>(*it);
    for (const auto& [name, a] : file.assignment) {
      if (a > file.model.full()) {
        throw schema_error("assignment of '" + name + "' is not an element of the algebra");
      }
    }
  }
  return file;
}

json algebra_to_json(const AlgebraFile& file) {
  json doc;
  doc["atoms"] = file.model.atom_count;
  doc["true_point"] = file.model.true_point;
  doc["K"] = file.model.know;
  doc["B"] = file.model.believe;
  json g = json::object();
  for (const auto& [name, a] : file.assignment) g[name] = a;
  doc["assignment"] = g;
  return doc;
}

std::string write_algebra(const AlgebraFile& file) { return algebra_to_json(file).dump() + "\n"; }

frames::FrameModel parse_frame_model(std::string_view text) {
  const json doc = parse_json_document(text);
  reject_unknown_keys(doc,
                      {"worlds", "designated", "propositions", "core_K", "core_B", "assignment"});
  frames::FrameModel km;
  const std::uint64_t worlds = as_unsigned(require(doc, "worlds"), "worlds");
  if (worlds == 0) throw schema_error("worlds must be positive");
  if (worlds > frames::kMaxWorlds) {
    throw frames::SizeLimitExceeded("frame has " + std::to_string(worlds) + " worlds (limit " +
                                    std::to_string(frames::kMaxWorlds) + ")");
  }
  km.frame.world_count = static_cast<std::size_t>(worlds);
  km.frame.designated = static_cast<std::size_t>(as_unsigned(require(doc, "designated"), "designated"));
  const json& props = require(doc, "propositions");
  if (props.is_string()) {
    if (props.get<std::string>() != "full") {
      throw schema_error("propositions must be \"full\" or an array of bitmasks");
    }
  } else {
    km.frame.propositions = as_unsigned_list(props, "propositions");
  }
  km.frame.core_k = as_unsigned_list(require(doc, "core_K"), "core_K");
  km.frame.core_b = as_unsigned_list(require(doc, "core_B"), "core_B");
  if (const auto it = doc.find("assignment"); it != doc.end()) {
    km.assignment = as_assignment<frames::WorldSet>(*it);
  }
  return km;
}

json frame_model_to_json(const frames::FrameModel& km) {
  json doc;
  doc["worlds"] = km.frame.world_count;
  doc["designated"] = km.frame.designated;
  if (km.frame.full_powerset()) {
    doc["propositions"] = "full";
  } else {
    doc["propositions"] = *km.frame.propositions;
  }
  doc["core_K"] = km.frame.core_k;
  doc["core_B"] = km.frame.core_b;
  json g = json::object();
  for (const auto& [name, a] : km.assignment) g[name] = a;
  doc["assignment"] = g;
  return doc;
}

std::string write_frame_model(const frames::FrameModel& km) {
  return frame_model_to_json(km).dump() + "\n";
}

}  // namespace s5bke::io
