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

#ifndef DALG_RATIONAL_HPP
#define DALG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dalg {

/// Exact rational number. GMP keeps results of arithmetic canonical
/// (reduced, positive denominator), so equality is structural.
using Rational = mpq_class;
using Integer = mpz_class;

/// Builds num/den in canonical form. Throws std::domain_error on den == 0.
Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace dalg

#endif  // DALG_RATIONAL_HPP
