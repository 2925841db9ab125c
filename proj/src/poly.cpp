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

#include "dalg/poly.hpp"

#include <algorithm>
#include <numeric>

namespace dalg {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::size_t arity, std::size_t var, std::uint32_t power) {
  if (var >= arity) throw std::out_of_range("variable index out of range");
  Monomial m(arity);
  m.exponents_[var] = power;
  return m;
}

unsigned long Monomial::degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0UL);
}

bool Monomial::is_one() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial q(*this);
  for (std::size_t i = 0; i < exponents_.size(); ++i) q.exponents_[i] -= divisor.exponents_[i];
  return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m(a);
  for (std::size_t i = 0; i < m.exponents_.size(); ++i) m.exponents_[i] += b.exponents_[i];
  return m;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  auto da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  auto ea = a.exponents(), eb = b.exponents();
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

bool LexGreater::operator()(const Monomial& a, const Monomial& b) const {
  auto ea = a.exponents(), eb = b.exponents();
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(std::size_t arity, const Rational& c) {
  Polynomial p(arity);
  p.add_term(Monomial(arity), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t var) {
  Polynomial p(arity);
  p.add_term(Monomial::variable(arity, var), Rational(1));
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.arity());
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::from_terms(std::size_t arity, TermMap terms) {
  Polynomial p(arity);
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.arity() != arity) throw std::invalid_argument("monomial arity mismatch");
    it = it->second == 0 ? terms.erase(it) : std::next(it);
  }
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(arity_)); }

const Polynomial::TermMap::value_type& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return *terms_.begin();
}

void Polynomial::require_same_arity(const Polynomial& other) const {
  if (arity_ != other.arity_)
    throw std::invalid_argument("polynomial arity mismatch: " + std::to_string(arity_) +
                                " vs " + std::to_string(other.arity_));
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.arity() != arity_) throw std::invalid_argument("monomial arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_arity(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_arity(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_arity(b);
  Polynomial::TermMap acc;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto [it, inserted] = acc.try_emplace(ma * mb, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  return Polynomial::from_terms(a.arity_, std::move(acc));
}

Polynomial operator-(Polynomial p) {
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(arity_, Rational(1));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }
Polynomial negate(const Polynomial& p) { return -p; }
Polynomial scale(const Polynomial& p, const Rational& c) { return p * c; }

// ---------------------------------------------------------------------------
// Calculus and structure

namespace {

void require_var(const Polynomial& p, std::size_t var) {
  if (var >= p.arity())
    throw std::out_of_range("variable index " + std::to_string(var + 1) +
                            " out of range for arity " + std::to_string(p.arity()));
}

Monomial shift_exponent(const Monomial& m, std::size_t var, long delta) {
  std::vector<std::uint32_t> e(m.exponents().begin(), m.exponents().end());
  e[var] = static_cast<std::uint32_t>(static_cast<long>(e[var]) + delta);
  return Monomial(std::move(e));
}

}  // namespace

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
  require_var(p, var);
  Polynomial out(p.arity());
  for (const auto& [m, c] : p.terms()) {
    if (m[var] == 0) continue;
    out.add_term(shift_exponent(m, var, -1), c * m[var]);
  }
  return out;
}

Polynomial antiderivative(const Polynomial& p, std::size_t var) {
  require_var(p, var);
  Polynomial out(p.arity());
  for (const auto& [m, c] : p.terms()) {
    Rational k(m[var] + 1UL);
    out.add_term(shift_exponent(m, var, +1), c / k);
  }
  return out;
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
  if (images.size() != p.arity())
    throw std::invalid_argument("substitution needs " + std::to_string(p.arity()) +
                                " images, got " + std::to_string(images.size()));
  if (images.empty()) return p;
  const std::size_t target_arity = images.front().arity();
  for (const auto& g : images)
    if (g.arity() != target_arity) throw std::invalid_argument("substitution images differ in arity");

  // powers[i][k] = images[i]^k, filled lazily.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, std::uint32_t k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target_arity, Rational(1)));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };

  Polynomial out(target_arity);
  for (const auto& [m, c] : p.terms()) {
    Polynomial t = Polynomial::constant(target_arity, c);
    for (std::size_t i = 0; i < m.arity(); ++i)
      if (m[i] > 0) t *= power(i, m[i]);
    out += t;
  }
  return out;
}

Degree degree_in(const Polynomial& p, std::size_t var) {
  require_var(p, var);
  if (p.is_zero()) return Degree::neg_infinity();
  std::uint32_t d = 0;
  for (const auto& [m, c] : p.terms()) d = std::max(d, m[var]);
  return Degree(static_cast<long>(d));
}

Degree total_degree(const Polynomial& p) {
  if (p.is_zero()) return Degree::neg_infinity();
  return Degree(static_cast<long>(p.leading_term().first.degree()));
}

Polynomial coefficient_of_power(const Polynomial& p, std::size_t var, std::uint32_t power) {
  require_var(p, var);
  Polynomial out(p.arity());
  for (const auto& [m, c] : p.terms())
    if (m[var] == power) out.add_term(shift_exponent(m, var, -static_cast<long>(power)), c);
  return out;
}

Polynomial homogeneous_part(const Polynomial& p, unsigned long k) {
  Polynomial out(p.arity());
  for (const auto& [m, c] : p.terms())
    if (m.degree() == k) out.add_term(m, c);
  return out;
}

DivisionResult divide(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (dividend.arity() != divisor.arity()) throw std::invalid_argument("polynomial arity mismatch");
  const auto& [lead_m, lead_c] = divisor.leading_term();
  Polynomial quotient(dividend.arity());
  Polynomial remainder(dividend.arity());
  Polynomial rest = dividend;
  while (!rest.is_zero()) {
    auto [m, c] = rest.leading_term();
    if (lead_m.divides(m)) {
      Polynomial step = Polynomial::term(m.quotient(lead_m), c / lead_c);
      quotient += step;
      rest -= step * divisor;
    } else {
      remainder.add_term(m, c);
      rest.add_term(m, -c);
    }
  }
  return {std::move(quotient), std::move(remainder)};
}

}  // namespace dalg
