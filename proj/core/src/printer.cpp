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

#include <string>

#include "s5bke/syntax.hpp"

namespace s5bke::syntax {
namespace {

void print_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Kind::Var:
      out += f.name();
      return;
    case Kind::Bot:
      out += "bot";
      return;
    case Kind::Neg:
      out += "(~";
      break;
    case Kind::Box:
      out += "([]";
      break;
    case Kind::Know:
      out += "(K ";
      break;
    case Kind::Believe:
      out += "(B ";
      break;
    case Kind::Impl:
      out += '(';
      print_into(f.left(), out);
      out += " -> ";
      print_into(f.right(), out);
      out += ')';
      return;
  }
  print_into(f.sub(), out);
  out += ')';
}

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  out.reserve(f.size() * 4);
  print_into(f, out);
  return out;
}

}  // namespace s5bke::syntax
