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

// Closed forms for the match-and-reroll scheme: roll n s-sided dice, and while
// all n show the same face, add them and roll the whole set again.
//
// With p = s^(1-n) the chance of a match, the number of rounds N is geometric
// with P(N = j) = p^(j-1) (1 - p), every round has mean n(s+1)/2 whatever its
// match status, and so E(X) = E(N) n(s+1)/2 = n(s+1) / (2 (1 - p)).

#ifndef MATCHDICE_ANALYTIC_H_
#define MATCHDICE_ANALYTIC_H_

#include "matchdice/model.h"

namespace matchdice {

// s^(1-n). Throws DomainError for n = 0.
Rational match_probability(const DiceSpec& spec);

// n(s+1)/2, the mean of one round with no rerolls.
Rational expectation_single(const DiceSpec& spec);

// Mean of the exploding scheme. 0 for n = 0, divergent for n = 1 or s = 1.
ExactValue expectation_exploding(const DiceSpec& spec);

// E(N) = 1/(1 - p); divergent when p = 1. Throws DomainError for n = 0.
ExactValue expected_rounds(const DiceSpec& spec);

// P(N = j). Requires n, s >= 2.
Rational round_count_pmf(const DiceSpec& spec, long long j);

// E(X) - E(X_1) through its own closed form
// (s^(2-n) + s^(1-n)) / (1 - s^(1-n)) * n/2.
ExactValue expectation_difference(const DiceSpec& spec);

enum class LimitAxis { kDiceToInfinity, kSidesToInfinity };

// Limit of expectation_difference along one axis with the other held fixed.
// kDiceToInfinity takes fixed = s >= 2; kSidesToInfinity takes fixed = n >= 2.
ExactValue difference_limit(LimitAxis axis, long long fixed);

}  // namespace matchdice

#endif  // MATCHDICE_ANALYTIC_H_
