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

#include <nlohmann/json.hpp>

#include "s5bke/algebra.hpp"
#include "s5bke/frames.hpp"
#include "s5bke/kernel.hpp"

namespace s5bke::io {

// Input file errors carry a 1-based position; column 0 means "whole line".
class FileFormatError : public std::runtime_error {
 public:
  FileFormatError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(message), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Line-oriented proof format:
//
//   premises:
//   h: x
//   proof:
//   1. x ; prem h
//   2. x -> x ; ax CL
//   3. x ; mp 1 2
//
// `#` comments and blank lines are ignored. The premises section is optional.
kernel::Derivation parse_proof(std::string_view text);
std::string write_proof(const kernel::Derivation& d);

struct AlgebraFile {
  algebra::AlgebraicModel model;
  algebra::Assignment assignment;
};

// {"atoms": n, "true_point": i, "K": [...], "B": [...], "assignment": {...}}
// The assignment key is optional. `#` comments are allowed outside strings.
AlgebraFile parse_algebra(std::string_view text);
nlohmann::ordered_json algebra_to_json(const AlgebraFile& file);
std::string write_algebra(const AlgebraFile& file);

// {"worlds": n, "designated": i, "propositions": "full" | [...],
//  "core_K": [...], "core_B": [...], "assignment": {"x": mask, ...}}
frames::FrameModel parse_frame_model(std::string_view text);
nlohmann::ordered_json frame_model_to_json(const frames::FrameModel& km);
std::string write_frame_model(const frames::FrameModel& km);

// Drops `#` comments outside string literals, keeping line structure.
std::string strip_comments(std::string_view text);

}  // namespace s5bke::io
