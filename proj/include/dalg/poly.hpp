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

#ifndef DALG_POLY_HPP
#define DALG_POLY_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dalg/rational.hpp"

namespace dalg {

/// Degree of a polynomial. The zero polynomial has degree minus infinity,
/// which absorbs addition: -inf + d = -inf.
class Degree {
 public:
  constexpr explicit Degree(long value) : value_(value), finite_(true) {}
  static constexpr Degree neg_infinity() { return Degree(); }

  constexpr bool is_neg_infinity() const { return !finite_; }
  long value() const {
    if (!finite_) throw std::logic_error("degree of the zero polynomial has no value");
    return value_;
  }

  friend constexpr bool operator==(Degree a, Degree b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr Degree operator+(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return neg_infinity();
    return Degree(a.value_ + b.value_);
  }
  friend std::ostream& operator<<(std::ostream& os, Degree d) {
    return d.finite_ ? os << d.value_ : os << "-inf";
  }

 private:
  constexpr Degree() = default;
  long value_ = 0;
  bool finite_ = false;
};

/// Exponent vector x_1^{e_1} ... x_n^{e_n}; variables are 0-based in the API.
class Monomial {
 public:
  explicit Monomial(std::size_t arity) : exponents_(arity, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {}

  static Monomial variable(std::size_t arity, std::size_t var, std::uint32_t power = 1);

  std::size_t arity() const { return exponents_.size(); }
  std::uint32_t operator[](std::size_t var) const { return exponents_[var]; }
  std::span<const std::uint32_t> exponents() const { return exponents_; }
  unsigned long degree() const;
  bool is_one() const;

  bool divides(const Monomial& other) const;
  /// this / divisor; requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exponents_;
};

/// Graded lexicographic order with x_1 > x_2 > ... > x_n; "a comes first iff a > b".
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Pure lexicographic order with x_1 > ... > x_n.
struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
 public:
  /// Terms keyed by monomial, iterated in descending grlex order. No zero coefficients.
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  /// Zero polynomial of the given arity.
  explicit Polynomial(std::size_t arity) : arity_(arity) {}

  static Polynomial constant(std::size_t arity, const Rational& c);
  static Polynomial variable(std::size_t arity, std::size_t var);
  static Polynomial term(const Monomial& m, const Rational& c);
  /// Drops zero coefficients; all keys must have the given arity.
  static Polynomial from_terms(std::size_t arity, TermMap terms);

  std::size_t arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  /// Greatest term in grlex order; requires a nonzero polynomial.
  const TermMap::value_type& leading_term() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
  friend Polynomial operator-(Polynomial p);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned exponent) const;

  /// Adds c * m in place (the common accumulation primitive).
  void add_term(const Monomial& m, const Rational& c);

 private:
  void require_same_arity(const Polynomial& other) const;

  std::size_t arity_;
  TermMap terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial negate(const Polynomial& p);
Polynomial scale(const Polynomial& p, const Rational& c);

Polynomial partial_derivative(const Polynomial& p, std::size_t var);
/// Antiderivative in one variable with zero integration constant.
Polynomial antiderivative(const Polynomial& p, std::size_t var);

/// Evaluates p at (g_1, ..., g_n). The images must share one arity.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);

Degree degree_in(const Polynomial& p, std::size_t var);
Degree total_degree(const Polynomial& p);

/// Coefficient of var^power viewing p as a polynomial in var; the result keeps
/// the arity of p and does not involve var.
Polynomial coefficient_of_power(const Polynomial& p, std::size_t var, std::uint32_t power);

/// Homogeneous component of total degree k.
Polynomial homogeneous_part(const Polynomial& p, unsigned long k);

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Division by a single divisor with grlex leading-term reduction:
/// dividend = quotient * divisor + remainder, no remainder term divisible by
/// the divisor's leading monomial. Exact divisibility iff remainder is zero.
DivisionResult divide(const Polynomial& dividend, const Polynomial& divisor);

// ---------------------------------------------------------------------------
// Text form

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// {"x1", ..., "xn"}.
std::vector<std::string> default_variable_names(std::size_t arity);

/// Grammar:
///   expr    := term (('+' | '-') term)*
///   term    := factor ('*' factor)*
///   factor  := ('+' | '-') factor | primary ('^' integer)?
///   primary := integer ('/' integer)? | variable | '(' expr ')'
/// Implicit multiplication ("2x1", "x1x2") is rejected.
Polynomial parse_polynomial(std::string_view text, std::size_t arity);
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names);

/// Canonical form: terms in descending grlex order, explicit '*' and '^'.
std::string to_string(const Polynomial& p);
std::string to_string(const Polynomial& p, std::span<const std::string> names);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace dalg

#endif  // DALG_POLY_HPP
