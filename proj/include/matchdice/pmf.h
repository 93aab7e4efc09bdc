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

// Exact distributions for one round and for the exploding scheme.
//
// The exploding law is built by ascending value recursion. Writing q for the
// sub-PMF of a non-matching round and P for the law of the total,
//
//   P(x) = q(x) + s^(-n) * sum_{v=1..s} P(x - n v),
//
// where the sum runs over the face v of a matching round. Every match adds at
// least n >= 2, so P(x) only depends on smaller outcomes and any prefix of the
// support is exact. enumerate_oracle() walks dice histories directly and
// shares no code with the recursion.

#ifndef MATCHDICE_PMF_H_
#define MATCHDICE_PMF_H_

#include <cstdint>
#include <optional>

#include "matchdice/model.h"

namespace matchdice {

// Law of the sum of n independent uniform {1..s} dice. n = 0 gives the point
// mass at 0.
ExactPmf single_round_pmf(const DiceSpec& spec);

// Sub-PMF of one round's sum restricted to rounds that are not a match.
// Total mass 1 - s^(1-n). Requires n >= 2.
ExactPmf nonmatch_subpmf(const DiceSpec& spec);

// Cutoff used when the caller does not give one: 40 n s.
Outcome default_cutoff(const DiceSpec& spec);

// Exact law of the exploding total for every outcome <= x_max, with the
// remaining mass as tail. Requires n, s >= 2 and x_max >= n + 1.
TruncatedPmf exploding_pmf(const DiceSpec& spec,
                           std::optional<Outcome> x_max = std::nullopt);

// Sum of x P(x) over retained entries. A lower bound on the true mean when
// tail mass is positive.
Rational truncated_mean(const TruncatedPmf& pmf);

// Smallest retained outcome whose cumulative mass reaches q. Requires
// 0 <= q <= 1 - tail_mass.
Outcome cdf_quantile(const TruncatedPmf& pmf, const Rational& q);

// Work bound for enumerate_oracle: s^(depth + n) <= kOracleBudget.
inline constexpr std::uint64_t kOracleBudget = 100'000'000;

struct EnumerationResult {
  TruncatedPmf pmf;
  int depth = 0;
  std::uint64_t paths_explored = 0;
};

// Brute-force law of the exploding total over every history with fewer than
// depth matching rounds. Histories with depth or more matches go to the
// tail, which is therefore p^depth. Requires n, s >= 2, depth >= 1 and the
// budget above.
EnumerationResult enumerate_oracle(const DiceSpec& spec, int depth);

// True when s^(depth + n) fits in kOracleBudget.
bool oracle_depth_in_budget(const DiceSpec& spec, int depth);

// Largest depth inside the budget, or nullopt if even depth 1 is too big.
std::optional<int> max_oracle_depth(const DiceSpec& spec);

// Outcomes strictly below this value cannot be reached by a history with
// depth or more matches (depth matches of all ones add n depth, the closing
// round adds at least n + 1), so oracle and recursion must agree on them.
Outcome oracle_exact_below(const DiceSpec& spec, int depth);

}  // namespace matchdice

#endif  // MATCHDICE_PMF_H_
