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

#include "bankshap/rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <cstdio>
#include <memory>

#include "bankshap/error.hpp"

namespace bankshap {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw ValidationError("bad_rational", "not a rational literal: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) bad(text);

  Integer d(std::string(den), 10);
  if (d == 0) bad(text);
  Rational r(Integer(std::string(num), 10), d);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

Rational parse_decimal(std::string_view text) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return parse_rational(text);

  std::string_view whole = text.substr(0, dot);
  const std::string_view frac = text.substr(dot + 1);
  bool negative = false;
  if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
    negative = whole.front() == '-';
    whole.remove_prefix(1);
  }
  if (!all_digits(frac) || (!whole.empty() && !all_digits(whole))) bad(text);

  Integer scale = 1;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
  Integer digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
  Rational r(digits, scale);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

std::string to_decimal(const Rational& value, int significant_digits) {
  if (significant_digits < 1) significant_digits = 1;
  mpfr_t x;
  mpfr_init2(x, 256);
  mpfr_set_q(x, value.get_mpq_t(), MPFR_RNDN);
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Rg", significant_digits, x);
  std::string out(raw);
  mpfr_free_str(raw);
  mpfr_clear(x);
  return out;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer factorial(unsigned k) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

std::vector<Rational> shapley_weights(unsigned n) {
  std::vector<Rational> out;
  if (n == 0) return out;
  out.reserve(n);
  const Integer total = factorial(n);
  for (unsigned t = 0; t < n; ++t) {
    Rational w(factorial(t) * factorial(n - t - 1), total);
    w.canonicalize();
    out.push_back(std::move(w));
  }
  return out;
}

Integer common_denominator(std::span<const Rational> values) {
  Integer l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

}  // namespace bankshap
