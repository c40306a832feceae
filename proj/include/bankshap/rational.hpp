// Copyright 2026 The bankshap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BANKSHAP_RATIONAL_HPP
#define BANKSHAP_RATIONAL_HPP

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bankshap {

/// Arbitrary-precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses a decimal integer ("12", "-3") or a fraction ("7/6"). The result is
/// canonicalised. Throws ValidationError{"bad_rational"} on anything else.
Rational parse_rational(std::string_view text);

/// Like parse_rational but also accepts fixed-point decimals ("0.05"),
/// converted exactly.
Rational parse_decimal(std::string_view text);

/// Lowest-terms rendering: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Decimal rendering rounded to `significant_digits` digits.
std::string to_decimal(const Rational& value, int significant_digits = 12);

bool is_integer(const Rational& value);

Integer factorial(unsigned k);

/// Coefficients t!(n-t-1)!/n! for t = 0..n-1.
std::vector<Rational> shapley_weights(unsigned n);

/// Least common multiple of the denominators.
Integer common_denominator(std::span<const Rational> values);

}  // namespace bankshap

#endif  // BANKSHAP_RATIONAL_HPP
