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

#ifndef DALG_TESTS_ORACLE_HPP
#define DALG_TESTS_ORACLE_HPP

// Test-only reference implementations. Nothing here calls linalg or
// image_solver.

#include <algorithm>
#include <map>
#include <vector>

#include "dalg/derivation.hpp"
#include "dalg/poly.hpp"

namespace dalg::oracle {

using Dense = std::vector<std::vector<Rational>>;

/// Rank by Gaussian elimination with full pivoting (largest |entry| first).
inline std::size_t rank(Dense a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a.front().size();
  std::vector<bool> row_used(rows, false), col_used(cols, false);
  std::size_t r = 0;
  for (;;) {
    std::size_t pr = rows, pc = cols;
    Rational best = 0;
    for (std::size_t i = 0; i < rows; ++i) {
      if (row_used[i]) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (col_used[j]) continue;
        Rational v = abs(a[i][j]);
        if (v > best) best = v, pr = i, pc = j;
      }
    }
    if (pr == rows) return r;
    row_used[pr] = col_used[pc] = true;
    ++r;
    for (std::size_t i = 0; i < rows; ++i) {
      if (row_used[i] || a[i][pc] == 0) continue;
      const Rational f = a[i][pc] / a[pr][pc];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[pr][j];
    }
  }
}

/// All exponent vectors of total degree <= bound, in lex-descending order.
inline std::vector<Monomial> lex_monomials(std::size_t arity, unsigned bound) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(arity, 0);
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var == arity) {
      out.emplace_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, bound);
  std::sort(out.begin(), out.end(), LexGreater{});
  return out;
}

/// d(x^e) expanded term by term: sum_i e_i * x^{e - e_i} * c_i.
inline std::map<Monomial, Rational, LexGreater> apply_to_monomial(const Derivation& d, const Monomial& m) {
  std::map<Monomial, Rational, LexGreater> out;
  const std::size_t n = m.arity();
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i] == 0) continue;
    std::vector<std::uint32_t> lowered(m.exponents().begin(), m.exponents().end());
    --lowered[i];
    const Monomial base(lowered);
    for (const auto& [cm, cv] : d.coefficient(i).terms()) out[base * cm] += Rational(m[i]) * cv;
  }
  return out;
}

/// Is target = d(r) for some r of total degree <= bound? Decided by comparing
/// rank(M) with rank([M | target]).
inline bool in_image(const Derivation& d, const Polynomial& target, unsigned bound) {
  const auto domain = lex_monomials(d.arity(), bound);
  std::vector<std::map<Monomial, Rational, LexGreater>> images;
  std::map<Monomial, std::size_t, LexGreater> rows;
  for (const auto& m : domain) {
    images.push_back(apply_to_monomial(d, m));
    for (const auto& [k, v] : images.back()) rows.emplace(k, 0);
  }
  for (const auto& [k, v] : target.terms()) rows.emplace(k, 0);
  std::size_t idx = 0;
  for (auto& [k, v] : rows) v = idx++;
  Dense a(rows.size(), std::vector<Rational>(domain.size() + 1, Rational(0)));
  for (std::size_t j = 0; j < domain.size(); ++j)
    for (const auto& [k, v] : images[j]) a[rows.at(k)][j] += v;
  for (const auto& [k, v] : target.terms()) a[rows.at(k)][domain.size()] = v;
  Dense without = a;
  for (auto& row : without) row.pop_back();
  return rank(without) == rank(a);
}

}  // namespace dalg::oracle

#endif  // DALG_TESTS_ORACLE_HPP
