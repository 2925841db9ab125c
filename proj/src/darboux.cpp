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

#include "dalg/darboux.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>

#include "dalg/image_solver.hpp"
#include "dalg/linalg.hpp"

namespace dalg {

DarbouxWitness::DarbouxWitness(const Derivation& d, Polynomial p, Polynomial q)
    : p_(std::move(p)), q_(std::move(q)) {
  if (p_.is_constant()) throw std::logic_error("Darboux witness must be non-constant");
  if (!verify_darboux(d, p_, q_)) throw std::logic_error("Darboux witness fails d(p) = q*p");
}

bool verify_darboux(const Derivation& d, const Polynomial& p, const Polynomial& q) {
  return d.apply(p) == q * p;
}

std::optional<Polynomial> principal_stability_check(const Derivation& d, const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("stability check needs a nonzero polynomial");
  Polynomial dp = d.apply(p);
  if (dp.is_zero()) return Polynomial(p.arity());
  DivisionResult qr = divide(dp, p);
  if (!qr.remainder.is_zero()) return std::nullopt;
  return std::move(qr.quotient);
}

namespace {

// Matrix of P -> op(P) - q*P on the given domain monomials.
OperatorMatrix shifted_operator(const Derivation& op, const Polynomial& q, std::vector<Monomial> domain) {
  std::vector<Polynomial> images;
  images.reserve(domain.size());
  for (const auto& m : domain) {
    Polynomial basis = Polynomial::term(m, Rational(1));
    images.push_back(op.apply(basis) - q * basis);
  }
  return build_operator_matrix(std::move(domain), images);
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base)
      throw std::overflow_error("cofactor enumeration too large");
    out *= base;
  }
  return out;
}

// Visits every assignment of box values to `slots` coefficients.
template <typename Visit>
void for_each_tuple(std::size_t slots, const std::vector<int>& values, Visit&& visit) {
  std::vector<std::size_t> idx(slots, 0);
  std::vector<int> tuple(slots, values.front());
  for (;;) {
    visit(tuple);
    std::size_t k = 0;
    while (k < slots) {
      if (++idx[k] < values.size()) {
        tuple[k] = values[idx[k]];
        break;
      }
      idx[k] = 0;
      tuple[k] = values.front();
      ++k;
    }
    if (k == slots) return;
  }
}

// P -> op(P) - q*P reduced mod a prime, for q ranging over integer combinations
// of a fixed cofactor support. rank_p <= rank over Q, so a trivial kernel mod p
// certifies a trivial rational kernel.
class ModularShiftedOperator {
 public:
  static constexpr std::uint64_t kPrime = 2147483647;

  ModularShiftedOperator(const Derivation& op, const std::vector<Monomial>& domain,
                         const std::vector<Monomial>& support)
      : cols_(domain.size()) {
    std::map<Monomial, std::size_t, GrlexGreater> rows;
    auto row_of = [&](const Monomial& m) { return rows.try_emplace(m, rows.size()).first->second; };
    for (const auto& m : domain) {
      std::vector<std::pair<std::size_t, std::uint64_t>> entries;
      const Polynomial image = op.apply(Polynomial::term(m, Rational(1)));
      for (const auto& [mono, c] : image.terms()) {
        auto r = reduce(c);
        if (!r) {
          valid_ = false;
          return;
        }
        entries.emplace_back(row_of(mono), *r);
      }
      base_.push_back(std::move(entries));
      std::vector<std::size_t> shifted;
      for (const auto& beta : support) shifted.push_back(row_of(beta * m));
      shift_.push_back(std::move(shifted));
    }
    rows_ = rows.size();
  }

  bool valid() const { return valid_; }
  std::size_t cols() const { return cols_; }

  std::size_t rank(const std::vector<int>& q) const {
    std::vector<std::uint64_t> a(rows_ * cols_, 0);
    for (std::size_t j = 0; j < cols_; ++j) {
      for (const auto& [r, v] : base_[j]) a[r * cols_ + j] = v;
      for (std::size_t k = 0; k < q.size(); ++k) {
        if (q[k] == 0) continue;
        std::uint64_t& e = a[shift_[j][k] * cols_ + j];
        e = (e + kPrime - to_mod(q[k])) % kPrime;
      }
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
      std::size_t pivot = rank;
      while (pivot < rows_ && a[pivot * cols_ + c] == 0) ++pivot;
      if (pivot == rows_) continue;
      if (pivot != rank)
        for (std::size_t k = c; k < cols_; ++k) std::swap(a[pivot * cols_ + k], a[rank * cols_ + k]);
      const std::uint64_t inv = power(a[rank * cols_ + c], kPrime - 2);
      for (std::size_t r = rank + 1; r < rows_; ++r) {
        std::uint64_t f = a[r * cols_ + c];
        if (f == 0) continue;
        f = f * inv % kPrime;
        for (std::size_t k = c; k < cols_; ++k)
          a[r * cols_ + k] = (a[r * cols_ + k] + (kPrime - f) * a[rank * cols_ + k]) % kPrime;
      }
      ++rank;
    }
    return rank;
  }

 private:
  static std::uint64_t to_mod(long v) {
    long r = v % static_cast<long>(kPrime);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long>(kPrime) : r);
  }

  static std::uint64_t power(std::uint64_t b, std::uint64_t e) {
    std::uint64_t out = 1;
    for (b %= kPrime; e; e >>= 1, b = b * b % kPrime)
      if (e & 1) out = out * b % kPrime;
    return out;
  }

  static std::optional<std::uint64_t> reduce(const Rational& c) {
    const Integer p(static_cast<unsigned long>(kPrime));
    Integer num = c.get_num() % p, den = c.get_den() % p;
    if (den == 0) return std::nullopt;
    if (num < 0) num += p;
    return to_mod(num.get_si()) * power(den.get_ui(), kPrime - 2) % kPrime;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  bool valid_ = true;
  std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> base_;
  std::vector<std::vector<std::size_t>> shift_;
};

Polynomial assemble(std::size_t arity, const std::vector<Monomial>& monomials, const std::vector<int>& coeffs) {
  Polynomial q(arity);
  for (std::size_t i = 0; i < monomials.size(); ++i) q.add_term(monomials[i], Rational(coeffs[i]));
  return q;
}

}  // namespace

FixedCofactorResult darboux_search_fixed_cofactor(const Derivation& d, const Polynomial& q, unsigned bound) {
  if (q.arity() != d.arity()) throw std::invalid_argument("cofactor arity differs from derivation arity");
  OperatorMatrix op = shifted_operator(d, q, monomials_up_to(d.arity(), bound));
  KernelBasis k = kernel(op.matrix);
  FixedCofactorResult result;
  result.kernel_dimension = k.dimension();
  for (const auto& v : k.vectors) {
    Polynomial p = op.combination(v, d.arity());
    if (!p.is_constant()) result.nonconstant.push_back(std::move(p));
  }
  return result;
}

StableIdealReport stable_ideal_scan(const Derivation& d, const ScanConfig& cfg) {
  if (cfg.box_lo > cfg.box_hi) throw std::invalid_argument("empty coefficient box");
  const std::size_t n = d.arity();
  const Degree max_deg = d.max_coefficient_degree();
  const int bound = max_deg.is_neg_infinity() ? -1 : static_cast<int>(max_deg.value()) - 1;
  const int cofactor_degree = cfg.cofactor_degree.value_or(bound);

  StableIdealReport report;
  report.degree_p = cfg.degree_p;
  report.cofactor_degree = cofactor_degree;
  report.cofactor_bound = bound;
  report.box_lo = cfg.box_lo;
  report.box_hi = cfg.box_hi;
  report.top_degree_filter = cfg.top_degree_filter;
  if (cofactor_degree > bound)
    report.notes.push_back("cofactor_degree " + std::to_string(cofactor_degree) + " exceeds the cofactor bound " +
                           std::to_string(bound) + "; cofactors above the bound cannot occur");

  std::vector<int> values;
  for (int v = cfg.box_lo; v <= cfg.box_hi; ++v) values.push_back(v);
  const bool zero_in_box = cfg.box_lo <= 0 && 0 <= cfg.box_hi;

  std::vector<Monomial> all_monomials =
      cofactor_degree >= 0 ? monomials_up_to(n, static_cast<unsigned>(cofactor_degree)) : std::vector<Monomial>{};
  report.cofactors_enumerated = checked_pow(values.size(), all_monomials.size());

  // Constants lie in the kernel exactly when q = 0; anything beyond them is a witness.
  const ModularShiftedOperator modular(d, monomials_up_to(n, cfg.degree_p), all_monomials);
  auto solve_for = [&](const std::vector<int>& coeffs) {
    ++report.cofactors_solved;
    const bool q_zero = std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
    if (modular.valid() && modular.rank(coeffs) + (q_zero ? 1 : 0) >= modular.cols()) return;
    Polynomial q = assemble(n, all_monomials, coeffs);
    FixedCofactorResult r = darboux_search_fixed_cofactor(d, q, cfg.degree_p);
    for (auto& p : r.nonconstant) report.witnesses.emplace_back(d, std::move(p), q);
  };

  if (!cfg.top_degree_filter) {
    for_each_tuple(all_monomials.size(), values, solve_for);
    return report;
  }

  // Split cofactor monomials by degree relative to the bound. If d(p) = q*p
  // with deg p = k and top homogeneous part P, the degree k+bound part reads
  // D_top(P) = q_bound * P, where D_top keeps the degree-(bound+1) part of each
  // coefficient; q has no terms above the bound.
  std::vector<Monomial> top, low;
  std::vector<std::size_t> top_slots, low_slots;  // positions in all_monomials
  std::size_t high_count = 0;
  for (std::size_t i = 0; i < all_monomials.size(); ++i) {
    const auto& m = all_monomials[i];
    const int deg = static_cast<int>(m.degree());
    if (deg > bound) {
      ++high_count;
    } else if (deg == bound) {
      top.push_back(m);
      top_slots.push_back(i);
    } else {
      low.push_back(m);
      low_slots.push_back(i);
    }
  }
  const std::uint64_t low_count = checked_pow(values.size(), low.size());
  const std::uint64_t survivors_high = (high_count == 0 || zero_in_box) ? 1 : 0;
  report.cofactors_pruned =
      report.cofactors_enumerated - survivors_high * checked_pow(values.size(), top.size()) * low_count;
  if (survivors_high == 0) return report;

  std::vector<Polynomial> top_coeffs;
  for (const auto& c : d.coefficients())
    top_coeffs.push_back(max_deg.is_neg_infinity() ? Polynomial(n)
                                                   : homogeneous_part(c, static_cast<unsigned long>(max_deg.value())));
  const Derivation top_part(std::move(top_coeffs));

  std::vector<ModularShiftedOperator> top_modular;
  for (unsigned k = 1; k <= cfg.degree_p; ++k) top_modular.emplace_back(top_part, monomials_of_degree(n, k), top);
  auto admissible = [&](const std::vector<int>& t) {
    const Polynomial q_top = assemble(n, top, t);
    for (unsigned k = 1; k <= cfg.degree_p; ++k) {
      const auto& mod = top_modular[k - 1];
      if (mod.valid() && mod.rank(t) == mod.cols()) continue;
      OperatorMatrix op = shifted_operator(top_part, q_top, monomials_of_degree(n, k));
      if (kernel(op.matrix).dimension() > 0) return true;
    }
    return false;
  };

  std::vector<int> coeffs(all_monomials.size(), 0);
  for_each_tuple(top.size(), values, [&](const std::vector<int>& t) {
    if (!admissible(t)) {
      report.cofactors_pruned += low_count;
      return;
    }
    for (std::size_t i = 0; i < t.size(); ++i) coeffs[top_slots[i]] = t[i];
    for_each_tuple(low.size(), values, [&](const std::vector<int>& u) {
      for (std::size_t i = 0; i < u.size(); ++i) coeffs[low_slots[i]] = u[i];
      solve_for(coeffs);
    });
  });
  return report;
}

}  // namespace dalg
