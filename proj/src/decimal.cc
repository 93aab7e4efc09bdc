// Copyright 2026 The matchdice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matchdice/decimal.h"

#include <stdexcept>

#include "matchdice/powers.h"

namespace matchdice {
namespace {

Rational pow10(long exponent) {
  if (exponent >= 0) return Rational(pow_int(10, static_cast<unsigned long>(exponent)));
  return Rational(Integer(1), pow_int(10, static_cast<unsigned long>(-exponent)));
}

// floor(log10(x)) for x > 0.
long decimal_exponent(const Rational& x) {
  long e = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 10));
  while (x >= pow10(e + 1)) ++e;
  while (x < pow10(e)) --e;
  return e;
}

}  // namespace

std::string format_decimal(const Rational& value, int significant_digits) {
  if (significant_digits < 1) {
    throw std::invalid_argument("precision must be at least 1");
  }
  if (sgn(value) == 0) return "0.0";

  const bool negative = sgn(value) < 0;
  const Rational magnitude = abs(value);
  long e = decimal_exponent(magnitude);

  // digits = magnitude * 10^(p - 1 - e), rounded half to even.
  Rational scaled = magnitude * pow10(significant_digits - 1 - e);
  Integer digits;
  Integer remainder;
  mpz_fdiv_qr(digits.get_mpz_t(), remainder.get_mpz_t(),
              scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  const int half = cmp(2 * remainder, Integer(scaled.get_den()));
  if (half > 0 || (half == 0 && mpz_odd_p(digits.get_mpz_t()))) ++digits;
  if (digits == pow_int(10, static_cast<unsigned long>(significant_digits))) {
    digits /= 10;
    ++e;
  }

  std::string text = digits.get_str();  // exactly significant_digits long
  std::string result = negative ? "-" : "";
  auto trim = [](std::string fraction) {
    while (fraction.size() > 1 && fraction.back() == '0') fraction.pop_back();
    return fraction;
  };

  if (e < -6) {
    std::string fraction = text.size() > 1 ? trim(text.substr(1)) : "";
    result += text.substr(0, 1);
    if (!fraction.empty() && fraction != "0") result += "." + fraction;
    return result + "e-" + std::to_string(-e);
  }
  if (e < 0) {
    return result + "0." + std::string(static_cast<std::size_t>(-e - 1), '0') +
           trim(text);
  }
  const auto int_len = static_cast<std::size_t>(e + 1);
  if (int_len >= text.size()) {
    return result + text + std::string(int_len - text.size(), '0') + ".0";
  }
  return result + text.substr(0, int_len) + "." + trim(text.substr(int_len));
}

}  // namespace matchdice
