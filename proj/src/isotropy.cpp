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

#include "dalg/isotropy.hpp"

#include <stdexcept>

namespace dalg {

Endomorphism::Endomorphism(std::vector<Polynomial> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("endomorphism needs at least one variable");
  for (const auto& g : images_)
    if (g.arity() != images_.size()) throw std::invalid_argument("endomorphism image arity mismatch");
}

Endomorphism Endomorphism::identity(std::size_t arity) {
  std::vector<Polynomial> g;
  for (std::size_t i = 0; i < arity; ++i) g.push_back(Polynomial::variable(arity, i));
  return Endomorphism(std::move(g));
}

Polynomial apply_endo(const Endomorphism& rho, const Polynomial& p) {
  if (p.arity() != rho.arity()) throw std::invalid_argument("endomorphism and polynomial arity differ");
  return substitute(p, rho.images());
}

Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner) {
  std::vector<Polynomial> g;
  g.reserve(inner.arity());
  for (const auto& gi : inner.images()) g.push_back(apply_endo(outer, gi));
  return Endomorphism(std::move(g));
}

Endomorphism translation(std::size_t arity, const Rational& c) {
  if (arity == 0) throw std::invalid_argument("translation needs at least one variable");
  std::vector<Polynomial> g;
  for (std::size_t i = 0; i < arity; ++i) g.push_back(Polynomial::variable(arity, i));
  g.back() += Polynomial::constant(arity, c);
  return Endomorphism(std::move(g));
}

CommutationResult commutes(const Derivation& d, const Endomorphism& rho) {
  if (d.arity() != rho.arity()) throw std::invalid_argument("derivation and endomorphism arity differ");
  CommutationResult result;
  result.commutes = true;
  for (std::size_t i = 0; i < d.arity(); ++i) {
    Polynomial r = d.apply(rho.image(i)) - apply_endo(rho, d.coefficient(i));
    if (!r.is_zero()) result.commutes = false;
    result.residuals.push_back(std::move(r));
  }
  return result;
}

Endomorphism AffineMap::to_endomorphism() const {
  const std::size_t n = arity();
  if (linear.rows() != n || linear.cols() != n) throw std::invalid_argument("affine map shape mismatch");
  std::vector<Polynomial> g;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial gi = Polynomial::constant(n, offset[i]);
    for (std::size_t j = 0; j < n; ++j)
      gi.add_term(Monomial::variable(n, j), linear(i, j));
    g.push_back(std::move(gi));
  }
  return Endomorphism(std::move(g));
}

bool AffineMap::is_translation_in_last() const {
  const std::size_t n = arity();
  if (linear != RationalMatrix::identity(n)) return false;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (offset[i] != 0) return false;
  return true;
}

bool is_affine_automorphism(const AffineMap& map) { return determinant(map.linear) != 0; }

AffineMap inverse(const AffineMap& map) {
  auto inv = dalg::inverse(map.linear);
  if (!inv) throw std::domain_error("affine map is not invertible");
  RationalVector shifted = multiply(*inv, map.offset);
  for (auto& v : shifted) v = -v;
  return AffineMap{std::move(*inv), std::move(shifted)};
}

Derivation conjugate(const Derivation& d, const Endomorphism& sigma, const Endomorphism& sigma_inverse) {
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i < d.arity(); ++i)
    c.push_back(apply_endo(sigma_inverse, d.apply(sigma.image(i))));
  return Derivation(std::move(c));
}

namespace {

// Enumerates parameter vectors; slot k ranges over ranges[k].
template <typename Visit>
void for_each_assignment(const std::vector<std::vector<int>>& ranges, Visit&& visit) {
  std::vector<std::size_t> idx(ranges.size(), 0);
  std::vector<int> values(ranges.size());
  for (std::size_t k = 0; k < ranges.size(); ++k) values[k] = ranges[k].front();
  for (;;) {
    visit(values);
    std::size_t k = 0;
    while (k < ranges.size()) {
      if (++idx[k] < ranges[k].size()) {
        values[k] = ranges[k][idx[k]];
        break;
      }
      idx[k] = 0;
      values[k] = ranges[k].front();
      ++k;
    }
    if (k == ranges.size()) return;
  }
}

std::vector<int> box(int lo, int hi, bool nonzero) {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v)
    if (!nonzero || v != 0) out.push_back(v);
  if (out.empty()) throw std::invalid_argument("empty parameter box");
  return out;
}

}  // namespace

std::vector<AffineMap> diagonal_affine_scan(const Derivation& d, int lo, int hi) {
  const std::size_t n = d.arity();
  std::vector<std::vector<int>> ranges;
  for (std::size_t i = 0; i < n; ++i) ranges.push_back(box(lo, hi, true));
  for (std::size_t i = 0; i < n; ++i) ranges.push_back(box(lo, hi, false));
  std::vector<AffineMap> found;
  for_each_assignment(ranges, [&](const std::vector<int>& v) {
    AffineMap map{RationalMatrix(n, n), RationalVector(n)};
    for (std::size_t i = 0; i < n; ++i) {
      map.linear(i, i) = v[i];
      map.offset[i] = v[n + i];
    }
    if (commutes(d, map.to_endomorphism()).commutes) found.push_back(std::move(map));
  });
  return found;
}

std::vector<AffineMap> triangular_affine_scan(const Derivation& d, int lo, int hi) {
  const std::size_t n = d.arity();
  std::vector<std::pair<std::size_t, std::size_t>> slots;  // (row, col), col <= row
  std::vector<std::vector<int>> ranges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      slots.emplace_back(i, j);
      ranges.push_back(box(lo, hi, i == j));
    }
  for (std::size_t i = 0; i < n; ++i) ranges.push_back(box(lo, hi, false));
  std::vector<AffineMap> found;
  for_each_assignment(ranges, [&](const std::vector<int>& v) {
    AffineMap map{RationalMatrix(n, n), RationalVector(n)};
    for (std::size_t k = 0; k < slots.size(); ++k) map.linear(slots[k].first, slots[k].second) = v[k];
    for (std::size_t i = 0; i < n; ++i) map.offset[i] = v[slots.size() + i];
    if (commutes(d, map.to_endomorphism()).commutes) found.push_back(std::move(map));
  });
  return found;
}

}  // namespace dalg
