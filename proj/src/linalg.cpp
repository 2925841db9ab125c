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

#include "dalg/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace dalg {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalVector multiply(const RationalMatrix& m, std::span<const Rational> v) {
  if (v.size() != m.cols()) throw std::invalid_argument("matrix-vector dimension mismatch");
  RationalVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0 && v[c] != 0) acc += m(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

namespace {

// Rows are kept sparse during elimination: matrices built from derivations
// have a handful of nonzeros per column.
template <typename T>
using SparseRow = std::vector<std::pair<std::size_t, T>>;

using IntRow = SparseRow<Integer>;
using RatRow = SparseRow<Rational>;

IntRow to_primitive_integer_row(std::span<const Rational> dense) {
  Integer lcm_den = 1;
  for (const auto& q : dense)
    if (q != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
  IntRow row;
  Integer content = 0;
  for (std::size_t c = 0; c < dense.size(); ++c) {
    if (dense[c] == 0) continue;
    Integer v = dense[c].get_num() * (lcm_den / dense[c].get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    row.emplace_back(c, std::move(v));
  }
  if (content > 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  return row;
}

void make_primitive(IntRow& row) {
  Integer content = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    if (content == 1) return;
  }
  if (content > 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
}

// target <- s * target - t * source, both sorted by column.
void combine(IntRow& target, const Integer& s, const Integer& t, const IntRow& source) {
  IntRow out;
  out.reserve(target.size() + source.size());
  std::size_t i = 0, j = 0;
  Integer v;
  while (i < target.size() || j < source.size()) {
    if (j == source.size() || (i < target.size() && target[i].first < source[j].first)) {
      out.emplace_back(target[i].first, s * target[i].second);
      ++i;
    } else if (i == target.size() || source[j].first < target[i].first) {
      out.emplace_back(source[j].first, -t * source[j].second);
      ++j;
    } else {
      v = s * target[i].second - t * source[j].second;
      if (v != 0) out.emplace_back(target[i].first, v);
      ++i;
      ++j;
    }
  }
  target = std::move(out);
}

// a <- a - f * b over the rationals.
void axpy(RatRow& a, const Rational& f, const RatRow& b) {
  RatRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -f * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - f * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

struct Echelon {
  std::size_t cols = 0;
  std::vector<std::size_t> pivots;  // increasing
  std::vector<RatRow> rows;         // rows[k] has a 1 at pivots[k], zeros at other pivots
};

// Fraction-free forward elimination on primitive integer rows, followed by
// rational back-substitution to the reduced row echelon form. The pivot for a
// column is the first remaining row, top-down, with a nonzero entry there.
Echelon reduce(std::vector<IntRow> rows, std::size_t cols) {
  std::vector<std::size_t> remaining(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) remaining[r] = r;

  std::vector<std::pair<std::size_t, IntRow>> pivot_rows;
  Integer g, s, t;
  for (std::size_t col = 0; col < cols && !remaining.empty(); ++col) {
    auto leads_here = [&](std::size_t r) { return !rows[r].empty() && rows[r].front().first == col; };
    std::size_t pos = 0;
    while (pos < remaining.size() && !leads_here(remaining[pos])) ++pos;
    if (pos == remaining.size()) continue;
    const std::size_t pivot_index = remaining[pos];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pos));
    const IntRow& pivot = rows[pivot_index];
    const Integer& p = pivot.front().second;
    for (std::size_t r : remaining) {
      if (!leads_here(r)) continue;
      const Integer& a = rows[r].front().second;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), a.get_mpz_t());
      mpz_divexact(s.get_mpz_t(), p.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(t.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
      combine(rows[r], s, t, pivot);
      make_primitive(rows[r]);
    }
    pivot_rows.emplace_back(col, std::move(rows[pivot_index]));
  }

  Echelon e;
  e.cols = cols;
  for (auto& [col, irow] : pivot_rows) {
    Rational lead(irow.front().second);
    RatRow rrow;
    rrow.reserve(irow.size());
    for (auto& [c, v] : irow) rrow.emplace_back(c, Rational(v) / lead);
    e.pivots.push_back(col);
    e.rows.push_back(std::move(rrow));
  }
  // Clear entries above each pivot, last pivot first.
  for (std::size_t k = e.rows.size(); k-- > 0;) {
    const std::size_t col = e.pivots[k];
    for (std::size_t j = 0; j < k; ++j) {
      auto& row = e.rows[j];
      auto it = std::lower_bound(row.begin(), row.end(), col,
                                 [](const auto& entry, std::size_t c) { return entry.first < c; });
      if (it == row.end() || it->first != col) continue;
      Rational f = it->second;
      axpy(row, f, e.rows[k]);
    }
  }
  return e;
}

std::vector<IntRow> integer_rows(const RationalMatrix& m) {
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_primitive_integer_row(m.row(r)));
  return rows;
}

// Null space of the first `cols` columns of an echelon form.
KernelBasis kernel_from(const Echelon& e, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : e.pivots)
    if (p < cols) is_pivot[p] = true;

  std::vector<RationalVector> raw;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(cols);
    v[f] = 1;
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
      if (e.pivots[k] >= cols) continue;
      for (const auto& [c, q] : e.rows[k])
        if (c == f) v[e.pivots[k]] = -q;
    }
    raw.push_back(std::move(v));
  }

  KernelBasis basis;
  basis.cols = cols;
  if (raw.empty()) return basis;
  // Canonical form: the reduced echelon form of the basis itself.
  std::vector<IntRow> rows;
  rows.reserve(raw.size());
  for (const auto& v : raw) rows.push_back(to_primitive_integer_row(v));
  Echelon canon = reduce(std::move(rows), cols);
  for (const auto& row : canon.rows) {
    RationalVector v(cols);
    for (const auto& [c, q] : row) v[c] = q;
    basis.vectors.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) { return reduce(integer_rows(m), m.cols()).pivots.size(); }

KernelBasis kernel(const RationalMatrix& m) {
  return kernel_from(reduce(integer_rows(m), m.cols()), m.cols());
}

std::optional<Solution> solve(const RationalMatrix& m, std::span<const Rational> b) {
  return solve_with_rank(m, b).solution;
}

SolveReport solve_with_rank(const RationalMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows())
    throw std::invalid_argument("right-hand side has " + std::to_string(b.size()) +
                                " entries, matrix has " + std::to_string(m.rows()) + " rows");
  const std::size_t cols = m.cols();
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  RationalVector augmented(cols + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) augmented[c] = m(r, c);
    augmented[cols] = b[r];
    rows.push_back(to_primitive_integer_row(augmented));
  }
  Echelon e = reduce(std::move(rows), cols + 1);
  SolveReport report;
  report.rank = e.pivots.size();
  if (!e.pivots.empty() && e.pivots.back() == cols) {
    --report.rank;
    return report;
  }

  Solution s;
  s.particular.assign(cols, Rational(0));
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    const auto& row = e.rows[k];
    if (!row.empty() && row.back().first == cols) s.particular[e.pivots[k]] = row.back().second;
  }
  s.homogeneous = kernel_from(e, cols);
  report.solution = std::move(s);
  return report;
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  // Bareiss elimination on integer entries (rows scaled to clear denominators).
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Rational scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer lcm_den = 1;
    for (std::size_t c = 0; c < n; ++c)
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c).get_num() * (lcm_den / m(r, c).get_den());
    scale /= Rational(lcm_den);
  }
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return Rational(0);
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return Rational(a[n - 1][n - 1]) * sign * scale;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix inv(n, n);
  RationalVector unit(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(unit.begin(), unit.end(), Rational(0));
    unit[c] = 1;
    auto s = solve(m, unit);
    if (!s || s->homogeneous.dimension() != 0) return std::nullopt;
    for (std::size_t r = 0; r < n; ++r) inv(r, c) = s->particular[r];
  }
  return inv;
}

}  // namespace dalg
