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

#ifndef DALG_IMAGE_SOLVER_HPP
#define DALG_IMAGE_SOLVER_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dalg/derivation.hpp"
#include "dalg/linalg.hpp"
#include "dalg/poly.hpp"

namespace dalg {

/// Monomials of total degree exactly k, descending grlex.
std::vector<Monomial> monomials_of_degree(std::size_t arity, unsigned k);
/// Monomials of total degree <= bound, descending grlex.
std::vector<Monomial> monomials_up_to(std::size_t arity, unsigned bound);

/// Matrix of a linear map on polynomials restricted to span(domain). Column j
/// holds the coefficients of images[j]; rows are every monomial occurring in an
/// image or in one of the extra polynomials, descending grlex, so no part of
/// the image is ever dropped.
struct OperatorMatrix {
  std::vector<Monomial> domain;
  std::vector<Monomial> codomain;
  RationalMatrix matrix;

  /// Coordinates of p in the codomain basis; throws if p has a term outside it.
  RationalVector coordinates(const Polynomial& p) const;
  /// sum_j v[j] * domain[j].
  Polynomial combination(std::span<const Rational> v, std::size_t arity) const;
};

OperatorMatrix build_operator_matrix(std::vector<Monomial> domain, std::span<const Polynomial> images,
                                     std::span<const Polynomial> extra = {});

/// Matrix of d restricted to polynomials of total degree <= bound.
OperatorMatrix derivation_matrix(const Derivation& d, unsigned bound,
                                 std::span<const Polynomial> extra = {});

/// r with d(r) == target; the equation is re-checked on construction.
class ImageWitness {
 public:
  /// Throws std::logic_error if d(r) != target.
  ImageWitness(const Derivation& d, Polynomial r, Polynomial target);

  const Polynomial& r() const { return r_; }
  const Polynomial& target() const { return target_; }

 private:
  Polynomial r_;
  Polynomial target_;
};

struct MembershipReport {
  unsigned degree_bound = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  std::optional<ImageWitness> witness;
};

/// Decides whether target = d(r) for some r of total degree <= bound.
/// Absence is bounded evidence only: higher-degree preimages are not examined.
MembershipReport image_membership(const Derivation& d, const Polynomial& target, unsigned bound);

/// Membership of the unit 1 (units of k[x_1..x_n] are the nonzero constants).
MembershipReport unit_in_image(const Derivation& d, unsigned bound);

/// One solution of d(r) = a * x_var + b.
struct AffineSolution {
  Polynomial r;
  Rational a;
  Rational b;
};

struct AffineScanReport {
  std::size_t var = 0;
  unsigned degree_bound = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;  // domain monomials + 2 (for a and b)
  std::size_t rank = 0;
  /// Basis of the full solution space in (coefficients of r, a, b).
  std::vector<AffineSolution> basis;
  /// Every solution has a = b = 0 and r constant.
  bool trivial_only = false;
};

/// Solves d(r) - a*x_var - b = 0 jointly in r (total degree <= bound), a and b.
AffineScanReport affine_target_scan(const Derivation& d, std::size_t var, unsigned bound);

}  // namespace dalg

#endif  // DALG_IMAGE_SOLVER_HPP
