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

#ifndef DALG_LEMMA_ENGINE_HPP
#define DALG_LEMMA_ENGINE_HPP

// Coefficient chain of a hypothetical preimage r = sum_{i=0}^{l} f_i(x) y^i of
// a*x + b under d = y^m d/dx + (1 - x^alpha y) d/dy. Comparing y^i
// coefficients of d(r) = a*x + b gives, for i >= 1,
//
//   f'_{i-m}(x) = i x^alpha f_i(x) - (i+1) f_{i+1}(x),
//
// which determines f_{l-m}, ..., f_0 from f_l, ..., f_{l-m+1} up to one
// integration constant per step. Everything here is exact polynomial
// arithmetic in an extended ring whose extra variables stand for the free
// constants.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dalg/poly.hpp"

namespace dalg {

struct LemmaConfig {
  int m = 2;
  int alpha = 1;
  int j0 = 1;

  /// Length of the chain; f_l is the top coefficient.
  int l() const { return m * j0; }
  /// Throws std::invalid_argument unless m >= 2, alpha >= 1, j0 >= 1.
  void validate() const;
};

/// Variables of the extended ring k[x, y, a, b, lambda_1..lambda_{m-1}, c_{l-m}..c_0].
class ExtendedRing {
 public:
  explicit ExtendedRing(const LemmaConfig& cfg);

  struct Symbol {
    std::string name;
    std::string role;
  };

  std::size_t arity() const { return symbols_.size(); }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::vector<std::string> names() const;

  static constexpr std::size_t x = 0;
  static constexpr std::size_t y = 1;
  static constexpr std::size_t a = 2;
  static constexpr std::size_t b = 3;
  /// lambda_s = f_{l-s}, 1 <= s <= m-1.
  std::size_t lambda(int s) const;
  /// Integration constant introduced for f_i, 0 <= i <= l-m.
  std::size_t integration_constant(int i) const;

  Polynomial var(std::size_t index) const { return Polynomial::variable(arity(), index); }
  Polynomial constant(const Rational& c) const { return Polynomial::constant(arity(), c); }

 private:
  int m_;
  int l_;
  std::vector<Symbol> symbols_;
};

struct CoefficientSequence {
  LemmaConfig cfg;
  ExtendedRing ring;
  /// entries[i] = f_i for 0 <= i <= l.
  std::vector<Polynomial> entries;

  /// f_i, or zero outside 0..l.
  Polynomial f(int i) const;
};

/// f_l = 1, f_{l-s} = lambda_s, then antidifferentiates downward to f_0.
CoefficientSequence reconstruct_sequence(const LemmaConfig& cfg);

struct DegreeExpectation {
  int index;   // i in f_i
  int j;
  int s;       // 0 for the exact entries f_{l-mj}
  long degree;
  bool exact;  // deg_x f_i == degree, otherwise deg_x f_i <= degree
};

/// Expected x-degrees: deg f_{l-mj} = j(alpha+1) for 1 <= j <= j0 and
/// deg f_{l-mj+s} <= (j-1)(alpha+1) for 1 <= s <= m-1.
std::vector<DegreeExpectation> degree_schedule(const LemmaConfig& cfg);

struct DegreeViolation {
  DegreeExpectation expected;
  Degree actual;
  std::string reason;
};

struct ScheduleReport {
  std::size_t checked = 0;
  std::vector<DegreeViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Compares x-degrees (adjoined constants ignored) against degree_schedule.
/// Exact entries must also have a positive rational leading coefficient that
/// involves none of the adjoined constants.
ScheduleReport check_degree_schedule(const CoefficientSequence& seq, const LemmaConfig& cfg);

/// f_1, ..., f_m forced at the bottom of the chain: f_1 = a*x + b and
/// f_{i+1} = i x^alpha f_i / (i+1), with a and b the ring's symbols.
std::vector<Polynomial> closed_forms_low(const LemmaConfig& cfg, const ExtendedRing& ring);

/// Leading-coefficient ledger, keyed by j.
struct LeadingData {
  /// Leading coefficient of f_{l-jm} (coefficient of x^{j(alpha+1)}), 1 <= j <= j0.
  std::map<int, Rational> A;
  /// Coefficient of x^{(j-1)(alpha+1)+1} in f_{l-jm-1}, 1 <= j <= j0-1.
  std::map<int, Rational> B;
  /// Coefficient of x^{j(alpha+1)} in f_{l-jm-1}; involves lambda_1.
  std::map<int, Polynomial> A_companion;
};

/// Iterates the recurrences
///   A_j = (l-(j-1)m) A_{j-1} / (j(alpha+1)),                      A_1 = l/(alpha+1)
///   B_j = ((l-(j-1)m-1) B_{j-1} - (l-(j-1)m) A_{j-1}) / ((j-1)(alpha+1)+1),  B_1 = -l
/// without building the sequence.
LeadingData leading_ledger(const LemmaConfig& cfg);

/// d(r) - (a*x + b) for r = sum f_i y^i, assembled coefficient-wise as
///   sum_i (f'_{i-m} + (i+1) f_{i+1} - i x^alpha f_i) y^i - (a*x + b).
/// `f[i]` is f_i; x_var and y_var select the ring variables.
Polynomial residual(int m, int alpha, std::span<const Polynomial> f, const Polynomial& a,
                    const Polynomial& b, std::size_t x_var, std::size_t y_var);
Polynomial residual(const CoefficientSequence& seq, const Polynomial& a, const Polynomial& b);

enum class Resolution { SignClash, NoAdmissibleJ0, DegreeAbsurdity, Unresolved };

std::string to_string(Resolution r);

struct CaseEntry {
  int case_number = 0;          // 1: a != 0; 2: a = 0, b != 0; 3: a = b = 0
  std::string hypothesis;
  std::string degree_equation;  // matching condition on j0
  std::optional<int> j0;
  Resolution resolution = Resolution::Unresolved;
  // For sign clashes: ledger values at j = j0 - 1 and what they force.
  std::optional<Rational> A;
  std::optional<Rational> B;
  std::optional<Rational> forced_by_A;  // m * A, must be > 0
  std::optional<Rational> forced_by_B;  // (m-1) * B, must be < 0
  /// Coefficients read off the reconstructed sequence agree with A and B.
  std::optional<bool> symbolic_crosscheck;
  std::string companion_exclusion;  // why A_companion must vanish (or clash)
  std::string description;
};

struct Certificate {
  int m = 0;
  int alpha = 0;
  int j0_max = 0;  // candidates 1..j0_max
  std::string j0_one_exclusion;
  std::vector<CaseEntry> cases;
  bool complete() const;
};

/// Replays the three-case contradiction for every j0 candidate.
Certificate contradiction_certificate(int m, int alpha);

}  // namespace dalg

#endif  // DALG_LEMMA_ENGINE_HPP
