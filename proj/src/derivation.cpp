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

#include "dalg/derivation.hpp"

#include <algorithm>
#include <stdexcept>

namespace dalg {

Derivation::Derivation(std::vector<Polynomial> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw std::invalid_argument("derivation needs at least one variable");
  for (const auto& c : coefficients_)
    if (c.arity() != coefficients_.size())
      throw std::invalid_argument("derivation coefficient arity " + std::to_string(c.arity()) +
                                  " differs from ring arity " + std::to_string(coefficients_.size()));
}

Polynomial Derivation::apply(const Polynomial& p) const {
  if (p.arity() != arity())
    throw std::invalid_argument("derivation of arity " + std::to_string(arity()) +
                                " applied to polynomial of arity " + std::to_string(p.arity()));
  Polynomial out(arity());
  for (std::size_t i = 0; i < arity(); ++i) {
    if (coefficients_[i].is_zero()) continue;
    Polynomial dp = partial_derivative(p, i);
    if (!dp.is_zero()) out += coefficients_[i] * dp;
  }
  return out;
}

Degree Derivation::max_coefficient_degree() const {
  Degree best = Degree::neg_infinity();
  for (const auto& c : coefficients_) best = std::max(best, total_degree(c));
  return best;
}

void FamilyParams::validate() const {
  if (n < 2) throw std::invalid_argument("n must be >= 2, got " + std::to_string(n));
  if (m < 1) throw std::invalid_argument("m must be >= 1, got " + std::to_string(m));
  if (alpha < 1) throw std::invalid_argument("alpha must be >= 1, got " + std::to_string(alpha));
}

Derivation jordan_derivation(const FamilyParams& params) {
  params.validate();
  const auto n = static_cast<std::size_t>(params.n);
  std::vector<Polynomial> c;
  c.reserve(n);
  // 1 - x1 * x2^alpha
  std::vector<std::uint32_t> e(n, 0);
  e[0] = 1;
  e[1] = static_cast<std::uint32_t>(params.alpha);
  Polynomial first = Polynomial::constant(n, Rational(1));
  first.add_term(Monomial(e), Rational(-1));
  c.push_back(std::move(first));
  c.push_back(Polynomial::term(Monomial::variable(n, 0, static_cast<std::uint32_t>(params.m)), Rational(1)));
  for (std::size_t i = 2; i < n; ++i) c.push_back(Polynomial::variable(n, i - 1));
  return Derivation(std::move(c));
}

Derivation two_variable_derivation(int m, int alpha) {
  FamilyParams{2, m, alpha}.validate();
  Polynomial dx = Polynomial::term(Monomial::variable(2, 1, static_cast<std::uint32_t>(m)), Rational(1));
  Polynomial dy = Polynomial::constant(2, Rational(1));
  dy.add_term(Monomial({static_cast<std::uint32_t>(alpha), 1}), Rational(-1));
  return Derivation({std::move(dx), std::move(dy)});
}

namespace {

void require_permutation(std::span<const std::size_t> perm, std::size_t arity) {
  if (perm.size() != arity) throw std::invalid_argument("permutation length differs from arity");
  std::vector<bool> seen(arity, false);
  for (std::size_t v : perm) {
    if (v >= arity || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

}  // namespace

Polynomial permute_variables(const Polynomial& p, std::span<const std::size_t> perm) {
  require_permutation(perm, p.arity());
  std::vector<Polynomial> images;
  images.reserve(perm.size());
  for (std::size_t v : perm) images.push_back(Polynomial::variable(p.arity(), v));
  return substitute(p, images);
}

Derivation permute_variables(const Derivation& d, std::span<const std::size_t> perm) {
  require_permutation(perm, d.arity());
  std::vector<Polynomial> c(d.arity(), Polynomial(d.arity()));
  for (std::size_t i = 0; i < d.arity(); ++i) c[perm[i]] = permute_variables(d.coefficient(i), perm);
  return Derivation(std::move(c));
}

Derivation partial_derivation(std::size_t arity, std::size_t var) {
  if (var >= arity) throw std::out_of_range("variable index out of range");
  std::vector<Polynomial> c(arity, Polynomial(arity));
  c[var] = Polynomial::constant(arity, Rational(1));
  return Derivation(std::move(c));
}

Derivation euler_derivation(std::size_t arity) {
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i < arity; ++i) c.push_back(Polynomial::variable(arity, i));
  return Derivation(std::move(c));
}

}  // namespace dalg
