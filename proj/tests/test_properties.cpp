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

// Randomized invariants at a fixed seed (DALG_SEED overrides).

#include <doctest.h>

#include "dalg/darboux.hpp"
#include "dalg/image_solver.hpp"
#include "dalg/isotropy.hpp"
#include "dalg/linalg.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace dalg;
using dalg::testing::Random;

namespace {

constexpr int kCases = 1000;

// Random matrix of rank at most `r` (product of rows x r and r x cols factors).
RationalMatrix random_matrix(Random& rng, std::size_t rows, std::size_t cols) {
  const std::size_t r = 1 + rng.index(std::min(rows, cols) + 1);
  RationalMatrix a(rows, r), b(r, cols), out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < r; ++k) a(i, k) = rng.integer(-3, 3);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < cols; ++j) b(k, j) = rng.coin() ? rng.rational(3) : Rational(0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t k = 0; k < r; ++k) out(i, j) += a(i, k) * b(k, j);
  return out;
}

oracle::Dense dense(const RationalMatrix& m) {
  oracle::Dense d;
  for (std::size_t i = 0; i < m.rows(); ++i) d.emplace_back(m.row(i).begin(), m.row(i).end());
  return d;
}

}  // namespace

TEST_CASE("ring axioms") {
  Random rng(1);
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = 1 + rng.index(3);
    const Polynomial a = rng.polynomial(n, 3), b = rng.polynomial(n, 3), c = rng.polynomial(n, 3);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a - a).is_zero());
    REQUIRE(a * Polynomial::constant(n, 1) == a);
    const Polynomial ab = a * b;
    for (const auto& [m, v] : ab.terms()) REQUIRE(v != 0);
  }
}

TEST_CASE("degree of a product") {
  Random rng(2);
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = 1 + rng.index(3);
    const Polynomial a = rng.nonzero_polynomial(n, 4), b = rng.nonzero_polynomial(n, 4);
    REQUIRE(total_degree(a * b) == total_degree(a) + total_degree(b));
    for (std::size_t i = 0; i < n; ++i) REQUIRE(degree_in(a * b, i) == degree_in(a, i) + degree_in(b, i));
  }
}

TEST_CASE("parse and print round trip") {
  Random rng(3);
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = 1 + rng.index(4);
    const Polynomial p = rng.polynomial(n, 5, 6);
    const std::string s = to_string(p);
    REQUIRE(parse_polynomial(s, n) == p);
    REQUIRE(to_string(parse_polynomial(s, n)) == s);
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  Random rng(4);
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = 1 + rng.index(3), k = 1 + rng.index(3);
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(rng.polynomial(k, 2, 3));
    const Polynomial p = rng.polynomial(n, 3), q = rng.polynomial(n, 3);
    REQUIRE(substitute(p + q, images) == substitute(p, images) + substitute(q, images));
    REQUIRE(substitute(p * q, images) == substitute(p, images) * substitute(q, images));
  }
}

TEST_CASE("Leibniz rule and linearity") {
  Random rng(5);
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = 1 + rng.index(3);
    const Derivation d = rng.derivation(n, 3);
    const Polynomial p = rng.polynomial(n, 3), q = rng.polynomial(n, 3);
    const std::size_t i = rng.index(n);
    REQUIRE(partial_derivative(p * q, i) == p * partial_derivative(q, i) + q * partial_derivative(p, i));
    REQUIRE(d.apply(p * q) == p * d.apply(q) + q * d.apply(p));
    const Rational a = rng.rational(), b = rng.rational();
    REQUIRE(d.apply(a * p + b * q) == a * d.apply(p) + b * d.apply(q));
    if (!p.is_constant() && !d.max_coefficient_degree().is_neg_infinity())
      REQUIRE(total_degree(d.apply(p)) <= total_degree(p) + d.max_coefficient_degree() + Degree(-1));
  }
}

TEST_CASE("family satisfies Leibniz") {
  Random rng(6);
  for (int t = 0; t < kCases; ++t) {
    const int n = rng.integer(2, 4);
    const Derivation d = jordan_derivation({n, rng.integer(1, 4), rng.integer(1, 3)});
    const Polynomial p = rng.polynomial(static_cast<std::size_t>(n), 3), q = rng.polynomial(static_cast<std::size_t>(n), 3);
    REQUIRE(d.apply(p * q) == p * d.apply(q) + q * d.apply(p));
  }
}

TEST_CASE("division reconstructs the dividend") {
  Random rng(7);
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = 1 + rng.index(3);
    const Polynomial f = rng.polynomial(n, 4, 5), g = rng.nonzero_polynomial(n, 2, 3);
    const DivisionResult r = divide(f, g);
    REQUIRE(r.quotient * g + r.remainder == f);
    const DivisionResult exact = divide(f * g, g);
    REQUIRE(exact.remainder.is_zero());
    REQUIRE(exact.quotient == f);
  }
}

TEST_CASE("kernel soundness and rank-nullity") {
  Random rng(8);
  for (int t = 0; t < kCases; ++t) {
    const RationalMatrix m = random_matrix(rng, 1 + rng.index(6), 1 + rng.index(6));
    const KernelBasis k = kernel(m);
    const RationalVector zero(m.rows());
    for (const auto& v : k.vectors) REQUIRE(multiply(m, v) == zero);
    const std::size_t r = oracle::rank(dense(m));
    REQUIRE(rank(m) == r);
    REQUIRE(r + k.dimension() == m.cols());
    // reduced echelon: the pivot of vector i is 1 and is zero in every other vector
    std::size_t last = 0;
    for (std::size_t i = 0; i < k.dimension(); ++i) {
      std::size_t p = 0;
      while (k.vectors[i][p] == 0) ++p;
      REQUIRE(k.vectors[i][p] == 1);
      if (i > 0) REQUIRE(p > last);
      for (std::size_t o = 0; o < k.dimension(); ++o)
        if (o != i) REQUIRE(k.vectors[o][p] == 0);
      last = p;
    }
  }
}

TEST_CASE("solve soundness") {
  Random rng(9);
  for (int t = 0; t < kCases; ++t) {
    const RationalMatrix m = random_matrix(rng, 1 + rng.index(6), 1 + rng.index(6));
    RationalVector x(m.cols());
    for (auto& v : x) v = rng.rational();
    const RationalVector b = rng.coin() ? multiply(m, x) : [&] {
      RationalVector y(m.rows());
      for (auto& v : y) v = rng.rational();
      return y;
    }();
    auto s = solve(m, b);
    oracle::Dense aug = dense(m);
    for (std::size_t i = 0; i < m.rows(); ++i) aug[i].push_back(b[i]);
    REQUIRE(s.has_value() == (oracle::rank(aug) == oracle::rank(dense(m))));
    if (!s) continue;
    REQUIRE(multiply(m, s->particular) == b);
    for (const auto& v : s->homogeneous.vectors) {
      RationalVector shifted = s->particular;
      const Rational t = rng.rational();
      for (std::size_t j = 0; j < v.size(); ++j) shifted[j] += t * v[j];
      REQUIRE(multiply(m, shifted) == b);
    }
  }
}

TEST_CASE("determinant and inverse") {
  Random rng(10);
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = 1 + rng.index(4);
    const RationalMatrix m = random_matrix(rng, n, n);
    const bool full = oracle::rank(dense(m)) == n;
    REQUIRE((determinant(m) != 0) == full);
    auto inv = inverse(m);
    REQUIRE(inv.has_value() == full);
    if (inv)
      for (std::size_t j = 0; j < n; ++j) {
        RationalVector e(n);
        e[j] = 1;
        RationalVector col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = (*inv)(i, j);
        REQUIRE(multiply(m, col) == e);
      }
  }
}

TEST_CASE("image witnesses re-verify and persist at higher bounds") {
  Random rng(11);
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = 1 + rng.index(2);
    const Derivation d = rng.derivation(n, 2, 2);
    const Polynomial r = rng.polynomial(n, 2, 3);
    const Polynomial target = d.apply(r);
    const unsigned bound = static_cast<unsigned>(std::max<long>(0, total_degree(r).is_neg_infinity() ? 0 : total_degree(r).value()));
    const MembershipReport m = image_membership(d, target, bound);
    REQUIRE(m.witness);
    REQUIRE(d.apply(m.witness->r()) == target);
    const MembershipReport higher = image_membership(d, target, bound + 1);
    REQUIRE(higher.witness);
    REQUIRE(d.apply(higher.witness->r()) == target);
  }
}

TEST_CASE("Darboux witnesses re-verify") {
  Random rng(12);
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = 1 + rng.index(2);
    // p with d(p) = q*p by construction: Euler field on a homogeneous p
    Polynomial p(n);
    const unsigned k = 1 + static_cast<unsigned>(rng.index(3));
    const Polynomial source = rng.polynomial(n, k, 3);
    for (const auto& m : source.terms())
      if (m.first.degree() == k) p.add_term(m.first, m.second);
    if (p.is_zero()) p = Polynomial::term(Monomial::variable(n, 0, k), Rational(1));
    const Derivation e = euler_derivation(n);
    auto q = principal_stability_check(e, p);
    REQUIRE(q);
    REQUIRE(*q == Polynomial::constant(n, k));
    REQUIRE(verify_darboux(e, p, *q));

    const Derivation d = rng.derivation(n, 2, 2);
    const Polynomial f = rng.nonzero_polynomial(n, 2, 3);
    auto g = principal_stability_check(d, f);
    if (g) REQUIRE(verify_darboux(d, f, *g));
    const DivisionResult dr = divide(d.apply(f), f);
    REQUIRE(g.has_value() == dr.remainder.is_zero());
    const Polynomial c = rng.polynomial(n, 1, 2);
    for (const auto& w : darboux_search_fixed_cofactor(d, c, 2).nonconstant) REQUIRE(verify_darboux(d, w, c));
  }
}

TEST_CASE("conjugation is consistent with commutation") {
  Random rng(13);
  for (int t = 0; t < kCases; ++t) {
    const int n = rng.integer(3, 4);
    const auto un = static_cast<std::size_t>(n);
    const Derivation d = jordan_derivation({n, rng.integer(2, 3), rng.integer(1, 2)});
    AffineMap sigma{RationalMatrix(un, un), RationalVector(un)};
    for (std::size_t i = 0; i < un; ++i) {
      for (std::size_t j = 0; j < i; ++j) sigma.linear(i, j) = rng.integer(-2, 2);
      sigma.linear(i, i) = rng.coin() ? rng.integer(1, 3) : -rng.integer(1, 3);
      sigma.offset[i] = rng.rational();
    }
    REQUIRE(is_affine_automorphism(sigma));
    const Endomorphism s = sigma.to_endomorphism(), si = inverse(sigma).to_endomorphism();
    REQUIRE(compose(s, si) == Endomorphism::identity(un));
    const Endomorphism rho = translation(un, rng.rational());
    REQUIRE(commutes(d, rho).commutes);
    REQUIRE(commutes(conjugate(d, s, si), compose(si, compose(rho, s))).commutes);
  }
}

TEST_CASE("membership verdicts agree with the lex-ordered oracle") {
  Random rng(14);
  int positives = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng.index(2);
    const Derivation d = rng.derivation(n, 2, 2);
    const unsigned bound = 1 + static_cast<unsigned>(rng.index(3));
    const Polynomial target = rng.coin() ? d.apply(rng.polynomial(n, bound, 3)) : rng.polynomial(n, 3, 3);
    const bool ours = image_membership(d, target, bound).witness.has_value();
    REQUIRE(ours == oracle::in_image(d, target, bound));
    positives += ours ? 1 : 0;
  }
  CHECK(positives > 20);
  CHECK(positives < 100);
}
