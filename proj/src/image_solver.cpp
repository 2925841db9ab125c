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

#include "dalg/image_solver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dalg {

namespace {

void compositions(std::size_t arity, unsigned k, std::size_t var, std::vector<std::uint32_t>& e,
                  std::vector<Monomial>& out) {
  if (var + 1 == arity) {
    e[var] = k;
    out.emplace_back(e);
    return;
  }
  for (unsigned first = k + 1; first-- > 0;) {
    e[var] = first;
    compositions(arity, k - first, var + 1, e, out);
  }
  e[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t arity, unsigned k) {
  std::vector<Monomial> out;
  if (arity == 0) return out;
  std::vector<std::uint32_t> e(arity, 0);
  compositions(arity, k, 0, e, out);  // already descending lex within the degree
  return out;
}

std::vector<Monomial> monomials_up_to(std::size_t arity, unsigned bound) {
  std::vector<Monomial> out;
  for (unsigned k = bound + 1; k-- > 0;) {
    auto layer = monomials_of_degree(arity, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

RationalVector OperatorMatrix::coordinates(const Polynomial& p) const {
  RationalVector v(codomain.size());
  for (const auto& [m, c] : p.terms()) {
    auto it = std::lower_bound(codomain.begin(), codomain.end(), m, GrlexGreater{});
    if (it == codomain.end() || !(*it == m))
      throw std::logic_error("polynomial has a term outside the codomain basis");
    v[static_cast<std::size_t>(it - codomain.begin())] = c;
  }
  return v;
}

Polynomial OperatorMatrix::combination(std::span<const Rational> v, std::size_t arity) const {
  if (v.size() < domain.size()) throw std::invalid_argument("coefficient vector too short");
  Polynomial p(arity);
  for (std::size_t j = 0; j < domain.size(); ++j) p.add_term(domain[j], v[j]);
  return p;
}

OperatorMatrix build_operator_matrix(std::vector<Monomial> domain, std::span<const Polynomial> images,
                                     std::span<const Polynomial> extra) {
  if (domain.size() != images.size()) throw std::invalid_argument("one image per domain monomial required");
  std::map<Monomial, std::size_t, GrlexGreater> rows;
  for (const auto& img : images)
    for (const auto& [m, c] : img.terms()) rows.try_emplace(m, 0);
  for (const auto& p : extra)
    for (const auto& [m, c] : p.terms()) rows.try_emplace(m, 0);

  OperatorMatrix op{std::move(domain), {}, RationalMatrix(rows.size(), images.size())};
  op.codomain.reserve(rows.size());
  for (auto& [m, index] : rows) {
    index = op.codomain.size();
    op.codomain.push_back(m);
  }
  for (std::size_t j = 0; j < images.size(); ++j)
    for (const auto& [m, c] : images[j].terms()) op.matrix(rows.at(m), j) = c;
  return op;
}

OperatorMatrix derivation_matrix(const Derivation& d, unsigned bound, std::span<const Polynomial> extra) {
  auto domain = monomials_up_to(d.arity(), bound);
  std::vector<Polynomial> images;
  images.reserve(domain.size());
  for (const auto& m : domain) images.push_back(d.apply(Polynomial::term(m, Rational(1))));
  return build_operator_matrix(std::move(domain), images, extra);
}

ImageWitness::ImageWitness(const Derivation& d, Polynomial r, Polynomial target)
    : r_(std::move(r)), target_(std::move(target)) {
  if (d.apply(r_) != target_) throw std::logic_error("image witness does not satisfy d(r) = target");
}

MembershipReport image_membership(const Derivation& d, const Polynomial& target, unsigned bound) {
  if (target.arity() != d.arity()) throw std::invalid_argument("target arity differs from derivation arity");
  const Polynomial extra[] = {target};
  OperatorMatrix op = derivation_matrix(d, bound, extra);
  RationalVector rhs = op.coordinates(target);
  SolveReport solved = solve_with_rank(op.matrix, rhs);

  MembershipReport report;
  report.degree_bound = bound;
  report.rows = op.matrix.rows();
  report.cols = op.matrix.cols();
  report.rank = solved.rank;
  if (solved.solution)
    report.witness.emplace(d, op.combination(solved.solution->particular, d.arity()), target);
  return report;
}

MembershipReport unit_in_image(const Derivation& d, unsigned bound) {
  return image_membership(d, Polynomial::constant(d.arity(), Rational(1)), bound);
}

AffineScanReport affine_target_scan(const Derivation& d, std::size_t var, unsigned bound) {
  if (var >= d.arity()) throw std::out_of_range("target variable index out of range");
  const std::size_t n = d.arity();
  const Polynomial x = Polynomial::variable(n, var);
  const Polynomial one = Polynomial::constant(n, Rational(1));

  auto domain = monomials_up_to(n, bound);
  std::vector<Polynomial> images;
  images.reserve(domain.size() + 2);
  for (const auto& m : domain) images.push_back(d.apply(Polynomial::term(m, Rational(1))));
  // Unknowns a and b enter as the columns -x_var and -1.
  images.push_back(-x);
  images.push_back(-one);
  std::vector<Monomial> columns = domain;
  columns.push_back(Monomial::variable(n, var));  // placeholders; only the count matters
  columns.push_back(Monomial(n));
  OperatorMatrix op = build_operator_matrix(std::move(columns), images);
  op.domain.erase(op.domain.begin() + static_cast<std::ptrdiff_t>(domain.size()), op.domain.end());

  KernelBasis k = kernel(op.matrix);
  AffineScanReport report;
  report.var = var;
  report.degree_bound = bound;
  report.rows = op.matrix.rows();
  report.cols = op.matrix.cols();
  report.rank = report.cols - k.dimension();
  report.trivial_only = true;
  const std::size_t a_col = domain.size(), b_col = domain.size() + 1;
  for (const auto& v : k.vectors) {
    AffineSolution s{op.combination(v, n), v[a_col], v[b_col]};
    if (s.a != 0 || s.b != 0 || !s.r.is_constant()) report.trivial_only = false;
    // Each basis element is a genuine solution.
    if (d.apply(s.r) != s.a * x + s.b * one) throw std::logic_error("affine scan produced a non-solution");
    report.basis.push_back(std::move(s));
  }
  return report;
}

}  // namespace dalg
