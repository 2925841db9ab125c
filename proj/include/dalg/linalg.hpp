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

#ifndef DALG_LINALG_HPP
#define DALG_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dalg/rational.hpp"

namespace dalg {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  /// All rows must have equal length.
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

/// Basis of a null space in reduced row echelon form: vector k has its
/// leading 1 at pivots[k], pivots strictly increasing, and every other vector
/// is zero at each pivot column.
struct KernelBasis {
  std::size_t cols = 0;
  std::vector<RationalVector> vectors;

  std::size_t dimension() const { return vectors.size(); }
};

struct Solution {
  RationalVector particular;
  KernelBasis homogeneous;
};

RationalVector multiply(const RationalMatrix& m, std::span<const Rational> v);

std::size_t rank(const RationalMatrix& m);

/// Exact null space.
KernelBasis kernel(const RationalMatrix& m);

/// Solves m * x = b. Returns nullopt when the system is inconsistent; the
/// particular solution has every free variable set to zero.
/// Throws std::invalid_argument when b.size() != m.rows().
std::optional<Solution> solve(const RationalMatrix& m, std::span<const Rational> b);

struct SolveReport {
  std::size_t rank = 0;  // rank of m (not of the augmented matrix)
  std::optional<Solution> solution;
};

/// solve() plus the rank of m, from a single elimination.
SolveReport solve_with_rank(const RationalMatrix& m, std::span<const Rational> b);

/// Determinant via the same elimination; requires a square matrix.
Rational determinant(const RationalMatrix& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

}  // namespace dalg

#endif  // DALG_LINALG_HPP
