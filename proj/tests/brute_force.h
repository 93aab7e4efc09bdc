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

// Test-only oracles that enumerate dice rolls directly. Nothing here calls
// into the library's distribution code.

#ifndef MATCHDICE_TESTS_BRUTE_FORCE_H_
#define MATCHDICE_TESTS_BRUTE_FORCE_H_

#include <map>
#include <vector>

#include "matchdice/model.h"

namespace matchdice::testing {

// Calls visit(faces) for each of the s^n ordered rolls.
template <typename Visit>
void for_each_roll(int n, int s, Visit&& visit) {
  std::vector<int> faces(static_cast<std::size_t>(n), 1);
  while (true) {
    visit(static_cast<const std::vector<int>&>(faces));
    int l = 0;
    while (l < n && faces[l] == s) faces[l++] = 1;
    if (l == n) return;
    ++faces[l];
  }
}

inline bool all_equal(const std::vector<int>& faces) {
  for (int f : faces) {
    if (f != faces.front()) return false;
  }
  return true;
}

inline int sum_of(const std::vector<int>& faces) {
  int sum = 0;
  for (int f : faces) sum += f;
  return sum;
}

inline Rational inverse_power(int s, int e) {
  Integer d = 1;
  for (int i = 0; i < e; ++i) d *= s;
  return Rational(Integer(1), d);
}

// Fraction of rolls that are a match.
inline Rational brute_match_probability(int n, int s) {
  long matches = 0;
  long total = 0;
  for_each_roll(n, s, [&](const std::vector<int>& f) {
    ++total;
    if (all_equal(f)) ++matches;
  });
  Rational p(matches, total);
  p.canonicalize();
  return p;
}

// Law of one round's sum, optionally restricted to non-matching rolls.
inline std::map<Outcome, Rational> brute_round(int n, int s,
                                               bool nonmatch_only) {
  std::map<Outcome, Rational> law;
  const Rational each = inverse_power(s, n);
  for_each_roll(n, s, [&](const std::vector<int>& f) {
    if (nonmatch_only && all_equal(f)) return;
    law[sum_of(f)] += each;
  });
  return law;
}

// Exact P(X = x) for every x <= x_max by following every history of rolls
// whose running total stays <= x_max. Each round adds at least n, so the
// walk terminates.
inline void walk_histories(int n, int s, Outcome x_max, Outcome total,
                           const Rational& weight,
                           std::map<Outcome, Rational>& law) {
  const Rational each = weight * inverse_power(s, n);
  for_each_roll(n, s, [&](const std::vector<int>& f) {
    const Outcome next = total + sum_of(f);
    if (next > x_max) return;
    if (all_equal(f)) {
      walk_histories(n, s, x_max, next, each, law);
    } else {
      law[next] += each;
    }
  });
}

inline std::map<Outcome, Rational> brute_exploding_prefix(int n, int s,
                                                          Outcome x_max) {
  std::map<Outcome, Rational> law;
  walk_histories(n, s, x_max, 0, Rational(1), law);
  return law;
}

}  // namespace matchdice::testing

#endif  // MATCHDICE_TESTS_BRUTE_FORCE_H_
