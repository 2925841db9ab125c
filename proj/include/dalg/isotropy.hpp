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

#ifndef DALG_ISOTROPY_HPP
#define DALG_ISOTROPY_HPP

#include <cstddef>
#include <vector>

#include "dalg/derivation.hpp"
#include "dalg/linalg.hpp"
#include "dalg/poly.hpp"

namespace dalg {

/// Ring endomorphism rho of k[x_1..x_n] given by rho(x_i) = g_i.
class Endomorphism {
 public:
  /// Throws std::invalid_argument unless every image has arity images.size().
  explicit Endomorphism(std::vector<Polynomial> images);

  static Endomorphism identity(std::size_t arity);

  std::size_t arity() const { return images_.size(); }
  const std::vector<Polynomial>& images() const { return images_; }
  const Polynomial& image(std::size_t var) const { return images_.at(var); }

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  std::vector<Polynomial> images_;
};

/// rho(p) = p(g_1, ..., g_n).
Polynomial apply_endo(const Endomorphism& rho, const Polynomial& p);

/// (outer o inner)(x_i) = outer(inner(x_i)).
Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner);

/// x_i -> x_i for i < n, x_n -> x_n + c.
Endomorphism translation(std::size_t arity, const Rational& c);

struct CommutationResult {
  bool commutes = false;
  /// residuals[i] = d(g_i) - rho(d(x_i)).
  std::vector<Polynomial> residuals;
};

/// d o rho == rho o d, checked on the generators.
CommutationResult commutes(const Derivation& d, const Endomorphism& rho);

/// x -> linear * x + offset.
struct AffineMap {
  RationalMatrix linear;
  RationalVector offset;

  std::size_t arity() const { return offset.size(); }
  Endomorphism to_endomorphism() const;
  bool is_translation_in_last() const;
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// True iff the linear part has nonzero determinant.
bool is_affine_automorphism(const AffineMap& map);

/// Inverse map; throws std::domain_error if the linear part is singular.
AffineMap inverse(const AffineMap& map);

/// sigma^{-1} o d o sigma, a derivation when sigma is an automorphism.
Derivation conjugate(const Derivation& d, const Endomorphism& sigma, const Endomorphism& sigma_inverse);

/// All g_i = a_i x_i + c_i with integer a_i != 0, c_i in [lo, hi] that commute with d.
std::vector<AffineMap> diagonal_affine_scan(const Derivation& d, int lo, int hi);

/// Lower-triangular affine maps g_i = a_ii x_i + sum_{j<i} a_ij x_j + c_i
/// (a_ii != 0) with all parameters in [lo, hi] that commute with d.
std::vector<AffineMap> triangular_affine_scan(const Derivation& d, int lo, int hi);

}  // namespace dalg

#endif  // DALG_ISOTROPY_HPP
