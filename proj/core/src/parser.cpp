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

#include <cctype>
#include <string>
#include <vector>

#include "s5bke/syntax.hpp"

namespace s5bke::syntax {
namespace {

enum class Tok {
  Ident,
  Bot,
  Top,
  Not,
  Box,
  Diamond,
  Know,
  Believe,
  And,
  Or,
  Arrow,
  Iff,
  Equiv,  // ==
  LParen,
  RParen,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto starts_with = [&](std::string_view s) { return text.substr(i, s.size()) == s; };
  while (i < n) {
    const char c = text[i];
    if (c == '#') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    auto emit = [&](Tok kind, std::size_t len) {
      out.push_back({kind, std::string(text.substr(start, len)), {start, start + len}});
      i += len;
    };
    if (starts_with("<->")) {
      emit(Tok::Iff, 3);
    } else if (starts_with("<>")) {
      emit(Tok::Diamond, 2);
    } else if (starts_with("->")) {
      emit(Tok::Arrow, 2);
    } else if (starts_with("==")) {
      emit(Tok::Equiv, 2);
    } else if (starts_with("[]")) {
      emit(Tok::Box, 2);
    } else if (c == '~') {
      emit(Tok::Not, 1);
    } else if (c == '&') {
      emit(Tok::And, 1);
    } else if (c == '|') {
      emit(Tok::Or, 1);
    } else if (c == '(') {
      emit(Tok::LParen, 1);
    } else if (c == ')') {
      emit(Tok::RParen, 1);
    } else if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
      std::size_t j = i;
      while (j < n && is_word_char(text[j])) ++j;
      const std::string_view word = text.substr(i, j - i);
      if (word == "K") {
        emit(Tok::Know, 1);
      } else if (word == "B") {
        emit(Tok::Believe, 1);
      } else if (word == "bot") {
        emit(Tok::Bot, 3);
      } else if (word == "top") {
        emit(Tok::Top, 3);
      } else if (is_valid_variable_name(word)) {
        emit(Tok::Ident, word.size());
      } else {
        std::string message = "unknown identifier '" + std::string(word) +
                              "' (variables start with a lowercase letter)";
        if ((word[0] == 'K' || word[0] == 'B') && is_valid_variable_name(word.substr(1))) {
          message += "; did you mean '" + std::string(1, word[0]) + " " +
                     std::string(word.substr(1)) + "'?";
        }
        throw ParseError(message, {start, j});
      }
    } else {
      throw ParseError("unknown token '" + std::string(1, c) + "'", {start, start + 1});
    }
  }
  out.push_back({Tok::End, "", {n, n}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse_all() {
    Formula f = parse_iff();
    if (peek().kind == Tok::RParen) {
      throw ParseError("unbalanced ')'", peek().span);
    }
    if (peek().kind != Tok::End) {
      throw ParseError("unexpected token '" + peek().text + "'", peek().span);
    }
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  Formula parse_iff() {
    Formula lhs = parse_impl();
    const Tok k = peek().kind;
    if (k != Tok::Iff && k != Tok::Equiv) return lhs;
    advance();
    Formula rhs = parse_impl();
    if (peek().kind == Tok::Iff || peek().kind == Tok::Equiv) {
      throw ParseError("'<->' and '==' are non-associative; add parentheses", peek().span);
    }
    return k == Tok::Iff ? iff(lhs, rhs) : identity(lhs, rhs);
  }

  Formula parse_impl() {
    Formula lhs = parse_or();
    if (peek().kind != Tok::Arrow) return lhs;
    advance();
    return Formula::impl(lhs, parse_impl());
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (peek().kind == Tok::Or) {
      advance();
      lhs = disj(lhs, parse_and());
    }
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (peek().kind == Tok::And) {
      advance();
      lhs = conj(lhs, parse_unary());
    }
    return lhs;
  }

  static bool starts_formula(Tok k) {
    switch (k) {
      case Tok::Ident:
      case Tok::Bot:
      case Tok::Top:
      case Tok::Not:
      case Tok::Box:
      case Tok::Diamond:
      case Tok::Know:
      case Tok::Believe:
      case Tok::LParen:
        return true;
      default:
        return false;
    }
  }

  Formula parse_unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Not:
      case Tok::Box:
      case Tok::Diamond:
      case Tok::Know:
      case Tok::Believe: {
        const Token op = advance();
        if (!starts_formula(peek().kind)) {
          if (op.kind == Tok::Know || op.kind == Tok::Believe) {
            throw ParseError("reserved word '" + op.text +
                                 "' cannot be used as a variable; modal operator needs an operand",
                             op.span);
          }
          throw ParseError("operator '" + op.text + "' needs an operand", op.span);
        }
        Formula sub = parse_unary();
        switch (op.kind) {
          case Tok::Not:
            return Formula::neg(sub);
          case Tok::Box:
            return Formula::box(sub);
          case Tok::Diamond:
            return diamond(sub);
          case Tok::Know:
            return Formula::know(sub);
          default:
            return Formula::believe(sub);
        }
      }
      default:
        return parse_atom();
    }
  }

  Formula parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident:
        advance();
        return Formula::var(t.text);
      case Tok::Bot:
        advance();
        return Formula::bot();
      case Tok::Top:
        advance();
        return top();
      case Tok::LParen: {
        const SourceSpan open = advance().span;
        Formula inner = parse_iff();
        if (peek().kind != Tok::RParen) {
          if (peek().kind == Tok::End) throw ParseError("unbalanced '('", open);
          throw ParseError("expected ')' but found '" + peek().text + "'", peek().span);
        }
        advance();
        return inner;
      }
      case Tok::RParen:
        throw ParseError("unbalanced ')'", t.span);
      case Tok::End:
        throw ParseError("unexpected end of input", t.span);
      default:
        throw ParseError("expected a formula but found '" + t.text + "'", t.span);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(tokenize(text)).parse_all(); }

}  // namespace s5bke::syntax
