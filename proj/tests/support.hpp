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

#ifndef DALG_TESTS_SUPPORT_HPP
#define DALG_TESTS_SUPPORT_HPP

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "dalg/derivation.hpp"
#include "dalg/poly.hpp"

namespace dalg::testing {

inline constexpr std::uint64_t kDefaultSeed = 20261019;

/// DALG_SEED overrides the fixed seed.
inline std::uint64_t seed() {
  if (const char* s = std::getenv("DALG_SEED"); s && *s) return std::strtoull(s, nullptr, 10);
  return kDefaultSeed;
}

class Random {
 public:
  explicit Random(std::uint64_t salt = 0) : engine_(seed() ^ (salt * 0x9e3779b97f4a7c15ULL)) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(int span = 5) {
    const int den = integer(1, 4);
    return make_rational(integer(-span, span), den);
  }

  Rational nonzero_rational(int span = 5) {
    Rational q;
    do q = rational(span);
    while (q == 0);
    return q;
  }

  Monomial monomial(std::size_t arity, unsigned max_degree) {
    std::vector<std::uint32_t> e(arity, 0);
    const unsigned deg = static_cast<unsigned>(integer(0, static_cast<int>(max_degree)));
    for (unsigned k = 0; k < deg; ++k) ++e[index(arity)];
    return Monomial(std::move(e));
  }

  Polynomial polynomial(std::size_t arity, unsigned max_degree, int max_terms = 4) {
    Polynomial p(arity);
    const int terms = integer(0, max_terms);
    for (int t = 0; t < terms; ++t) p.add_term(monomial(arity, max_degree), rational());
    return p;
  }

  Polynomial nonzero_polynomial(std::size_t arity, unsigned max_degree, int max_terms = 4) {
    Polynomial p(arity);
    while (p.is_zero()) p = polynomial(arity, max_degree, max_terms);
    return p;
  }

  Derivation derivation(std::size_t arity, unsigned max_degree, int max_terms = 3) {
    std::vector<Polynomial> c;
    for (std::size_t i = 0; i < arity; ++i) c.push_back(polynomial(arity, max_degree, max_terms));
    return Derivation(std::move(c));
  }

 private:
  std::mt19937_64 engine_;
};

inline Polynomial P(const std::string& text, std::size_t arity) { return parse_polynomial(text, arity); }

}  // namespace dalg::testing

#endif  // DALG_TESTS_SUPPORT_HPP
