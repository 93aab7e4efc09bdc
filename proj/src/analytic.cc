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

#include "matchdice/analytic.h"

#include <string>

#include "matchdice/powers.h"

namespace matchdice {

Rational match_probability(const DiceSpec& spec) {
  if (spec.has_no_dice()) throw DomainError("match undefined for zero dice");
  return Rational(Integer(1), pow_int(spec.s, spec.n - 1));
}

Rational expectation_single(const DiceSpec& spec) {
  Rational mean(spec.n * (spec.s + 1), 2);
  mean.canonicalize();
  return mean;
}

ExactValue expectation_exploding(const DiceSpec& spec) {
  if (spec.has_no_dice()) return ExactValue::finite(0);
  if (spec.explodes_forever()) return ExactValue::divergent();
  return ExactValue::finite(expectation_single(spec) /
                            (1 - match_probability(spec)));
}

ExactValue expected_rounds(const DiceSpec& spec) {
  Rational p = match_probability(spec);
  if (p == 1) return ExactValue::divergent();
  return ExactValue::finite(1 / (1 - p));
}

Rational round_count_pmf(const DiceSpec& spec, long long j) {
  if (!spec.is_regular()) throw DomainError("round count degenerate");
  if (j < 0) throw DomainError("round index must be non-negative");
  if (j == 0) return 0;
  Rational p = match_probability(spec);
  // p^(j-1) = 1 / s^((n-1)(j-1)).
  const auto exponent = static_cast<unsigned long>(spec.n - 1) *
                        static_cast<unsigned long>(j - 1);
  Rational p_pow(Integer(1), pow_int(spec.s, exponent));
  return p_pow * (1 - p);
}

ExactValue expectation_difference(const DiceSpec& spec) {
  if (spec.has_no_dice()) return ExactValue::finite(0);
  if (spec.explodes_forever()) return ExactValue::divergent();
  const Integer s_pow = pow_int(spec.s, spec.n - 1);  // s^(n-1)
  Rational s_2mn(Integer(spec.s), s_pow);                      // s^(2-n)
  Rational s_1mn(Integer(1), s_pow);                           // s^(1-n)
  s_2mn.canonicalize();
  Rational half_n(spec.n, 2);
  half_n.canonicalize();
  return ExactValue::finite((s_2mn + s_1mn) / (1 - s_1mn) * half_n);
}

ExactValue difference_limit(LimitAxis axis, long long fixed) {
  switch (axis) {
    case LimitAxis::kDiceToInfinity:
      if (fixed < 2) {
        throw DomainError("n -> infinity limit requires s >= 2, got s = " +
                          std::to_string(fixed));
      }
      return ExactValue::finite(0);
    case LimitAxis::kSidesToInfinity:
      if (fixed < 2) {
        throw DomainError("s -> infinity limit requires n >= 2, got n = " +
                          std::to_string(fixed));
      }
      return ExactValue::finite(fixed == 2 ? 1 : 0);
  }
  throw DomainError("unknown limit axis");
}

}  // namespace matchdice
