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

#ifndef DALG_DARBOUX_HPP
#define DALG_DARBOUX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dalg/derivation.hpp"
#include "dalg/poly.hpp"

namespace dalg {

/// Non-constant p with d(p) = q * p; the principal ideal (p) is d-stable.
class DarbouxWitness {
 public:
  /// Throws std::logic_error unless p is non-constant and d(p) == q * p.
  DarbouxWitness(const Derivation& d, Polynomial p, Polynomial q);

  const Polynomial& p() const { return p_; }
  const Polynomial& q() const { return q_; }

 private:
  Polynomial p_;
  Polynomial q_;
};

bool verify_darboux(const Derivation& d, const Polynomial& p, const Polynomial& q);

/// The cofactor q with d(p) = q * p if p divides d(p), else nullopt.
/// Throws std::invalid_argument for p == 0.
std::optional<Polynomial> principal_stability_check(const Derivation& d, const Polynomial& p);

struct FixedCofactorResult {
  std::size_t kernel_dimension = 0;
  /// Non-constant members of a reduced echelon basis of ker(d - q) on degree <= bound.
  std::vector<Polynomial> nonconstant;
};

/// Every p of total degree <= bound with d(p) = q * p, as a kernel basis.
FixedCofactorResult darboux_search_fixed_cofactor(const Derivation& d, const Polynomial& q, unsigned bound);

struct ScanConfig {
  unsigned degree_p = 6;
  /// Defaults to max_i deg c_i - 1; a negative value means only q = 0.
  std::optional<int> cofactor_degree;
  int box_lo = -2;
  int box_hi = 2;
  /// Discards cofactors whose top-degree part admits no homogeneous solution
  /// (a necessary condition, so nothing is lost).
  bool top_degree_filter = true;
};

struct StableIdealReport {
  unsigned degree_p = 0;
  int cofactor_degree = 0;
  int cofactor_bound = 0;  // max_i deg c_i - 1
  int box_lo = 0;
  int box_hi = 0;
  bool top_degree_filter = true;
  std::uint64_t cofactors_enumerated = 0;
  std::uint64_t cofactors_pruned = 0;
  std::uint64_t cofactors_solved = 0;
  std::vector<DarbouxWitness> witnesses;
  std::vector<std::string> notes;

  static constexpr const char* kDisclaimer =
      "bounded evidence: complete in p (degree <= degree_p) for each enumerated integer cofactor, "
      "incomplete over rational cofactors and higher degrees";
};

/// Enumerates integer cofactors with coefficients in [box_lo, box_hi] and
/// total degree <= cofactor_degree, and collects all Darboux polynomials of
/// degree <= degree_p for each.
StableIdealReport stable_ideal_scan(const Derivation& d, const ScanConfig& cfg);

}  // namespace dalg

#endif  // DALG_DARBOUX_HPP
