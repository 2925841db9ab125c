/*
   Copyright 2026 The dalg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cctype>
#include <optional>
#include <sstream>

#include "dalg/poly.hpp"

namespace dalg {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)),
      position_(position) {}

std::vector<std::string> default_variable_names(std::size_t arity) {
  std::vector<std::string> names;
  names.reserve(arity);
  for (std::size_t i = 1; i <= arity; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> names) : text_(text), names_(names) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    Polynomial p = expr();
    skip_space();
    if (!at_end()) {
      if (is_ident_char(peek()) || peek() == '(')
        throw ParseError("implicit multiplication is not allowed; use '*'", pos_);
      throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
    }
    return p;
  }

 private:
  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      skip_space();
      if (at_end() || (peek() != '+' && peek() != '-')) return acc;
      char op = text_[pos_++];
      Polynomial rhs = term();
      if (op == '+') acc += rhs;
      else acc -= rhs;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_space();
      if (at_end() || peek() != '*') return acc;
      ++pos_;
      acc *= factor();
    }
  }

  Polynomial factor() {
    skip_space();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    if (peek() == '+') {
      ++pos_;
      return factor();
    }
    Polynomial base = primary();
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      auto digits = read_digits();
      if (!digits) throw ParseError("expected a non-negative integer exponent", start);
      if (digits->size() > 6) throw ParseError("exponent too large", start);
      base = base.pow(static_cast<unsigned>(std::stoul(*digits)));
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    std::size_t start = pos_;
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_space();
      if (at_end() || peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = *read_digits();
      std::string den = "1";
      if (!at_end() && peek() == '/') {
        ++pos_;
        auto d = read_digits();
        if (!d) throw ParseError("expected denominator after '/'", pos_);
        den = *d;
        if (Integer(den) == 0) throw ParseError("zero denominator", start);
      }
      if (!at_end() && is_ident_char(peek()))
        throw ParseError("implicit multiplication is not allowed; use '*'", pos_);
      return Polynomial::constant(names_.size(), make_rational(Integer(num), Integer(den)));
    }
    if (is_ident_start(c)) {
      while (!at_end() && is_ident_char(peek())) ++pos_;
      std::string_view ident = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == ident) return Polynomial::variable(names_.size(), i);
      throw ParseError("unknown variable '" + std::string(ident) + "' for arity " +
                           std::to_string(names_.size()),
                       start);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::optional<std::string> read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) return std::nullopt;
    return std::string(text_.substr(start, pos_ - start));
  }

  static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t arity) {
  auto names = default_variable_names(arity);
  return parse_polynomial(text, names);
}

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names) {
  return Parser(text, names).parse();
}

std::string to_string(const Polynomial& p) {
  return to_string(p, default_variable_names(p.arity()));
}

std::string to_string(const Polynomial& p, std::span<const std::string> names) {
  if (names.size() != p.arity()) throw std::invalid_argument("variable name count differs from arity");
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (magnitude != 1 || m.is_one()) {
      os << to_string(magnitude);
      wrote = true;
    }
    for (std::size_t i = 0; i < m.arity(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << '*';
      os << names[i];
      if (m[i] > 1) os << '^' << m[i];
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

}  // namespace dalg
