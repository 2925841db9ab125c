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

#ifndef DALG_DERIVATION_HPP
#define DALG_DERIVATION_HPP

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dalg/poly.hpp"

namespace dalg {

/// k-derivation d = sum_i c_i * d/dx_i on a polynomial ring in `arity` variables.
class Derivation {
 public:
  /// Throws std::invalid_argument unless every coefficient has arity coefficients.size().
  explicit Derivation(std::vector<Polynomial> coefficients);

  std::size_t arity() const { return coefficients_.size(); }
  const std::vector<Polynomial>& coefficients() const { return coefficients_; }
  const Polynomial& coefficient(std::size_t var) const { return coefficients_.at(var); }

  /// sum_i c_i * dp/dx_i.
  Polynomial apply(const Polynomial& p) const;

  /// max_i total_degree(c_i).
  Degree max_coefficient_degree() const;

  friend bool operator==(const Derivation&, const Derivation&) = default;

 private:
  std::vector<Polynomial> coefficients_;
};

inline Polynomial apply(const Derivation& d, const Polynomial& p) { return d.apply(p); }

/// Parameters of the family
///   d_n = (1 - x1*x2^alpha) d/dx1 + x1^m d/dx2 + x2 d/dx3 + ... + x_{n-1} d/dxn.
struct FamilyParams {
  int n = 2;
  int m = 2;
  int alpha = 1;

  /// Throws std::invalid_argument unless n >= 2, m >= 1, alpha >= 1.
  void validate() const;
  /// m >= 2: the regime in which the simplicity and no-unit claims are made.
  bool within_theorem_hypothesis() const { return m >= 2; }
};

Derivation jordan_derivation(const FamilyParams& params);

/// The two-variable form y^m d/dx + (1 - x^alpha*y) d/dy on k[x, y], with
/// variable 0 = x and variable 1 = y.
Derivation two_variable_derivation(int m, int alpha);

/// Variable names for the (x, y) coordinates of two_variable_derivation.
inline const std::vector<std::string>& xy_names() {
  static const std::vector<std::string> names{"x", "y"};
  return names;
}

/// Permutation witness taking the (x, y) coordinates to (x1, x2):
/// x -> x2, y -> x1. Entry i is the new index of old variable i.
inline constexpr std::array<std::size_t, 2> kXYToFamily{1, 0};

/// Renames variable i to variable perm[i]; perm must be a permutation.
/// The result satisfies renamed(rename(p)) == rename(d(p)).
Derivation permute_variables(const Derivation& d, std::span<const std::size_t> perm);
Polynomial permute_variables(const Polynomial& p, std::span<const std::size_t> perm);

/// d/dx_var on k[x_1..x_arity].
Derivation partial_derivation(std::size_t arity, std::size_t var);
/// Euler field sum_i x_i d/dx_i.
Derivation euler_derivation(std::size_t arity);

}  // namespace dalg

#endif  // DALG_DERIVATION_HPP
