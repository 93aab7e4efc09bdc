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

// Domain types shared by the analytic, distribution, sampling and notation
// layers. Every probability is an exact GMP rational.

#ifndef MATCHDICE_MODEL_H_
#define MATCHDICE_MODEL_H_

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace matchdice {

using Integer = mpz_class;
using Rational = mpq_class;
using Outcome = std::int64_t;

inline constexpr int kMaxDice = 50;
inline constexpr int kMaxSides = 10000;

// Raised when a value falls outside the artifact bounds. Names the field.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& message)
      : std::invalid_argument(message), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Raised when an operation is asked for a quantity outside its domain, e.g.
// the finite PMF of a divergent scheme.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// n dice with s sides each.
struct DiceSpec {
  int n = 0;
  int s = 1;

  bool has_no_dice() const { return n == 0; }
  bool is_single_die() const { return n == 1; }
  bool is_one_sided() const { return s == 1; }
  // True when the exploding scheme has no finite law (one die, or one side).
  bool explodes_forever() const { return n >= 1 && (n == 1 || s == 1); }
  // True when the closed forms for n, s >= 2 apply.
  bool is_regular() const { return n >= 2 && s >= 2; }

  friend bool operator==(const DiceSpec&, const DiceSpec&) = default;
};

// Checks 0 <= n <= kMaxDice and 1 <= s <= kMaxSides. Degenerate specs
// (n = 0, n = 1, s = 1) are legal.
DiceSpec validate_spec(long long n, long long s);

// A dice spec plus the choice between one roll and the match-and-reroll
// scheme.
struct RollExpression {
  DiceSpec spec;
  bool explode = false;

  friend bool operator==(const RollExpression&,
                         const RollExpression&) = default;
};

// A finite exact rational, or a divergent (infinite) expectation.
class ExactValue {
 public:
  static ExactValue finite(Rational value);
  static ExactValue divergent() { return ExactValue(); }

  bool is_finite() const { return finite_; }
  bool is_divergent() const { return !finite_; }
  // Throws DomainError when divergent.
  const Rational& value() const;

  friend bool operator==(const ExactValue& a, const ExactValue& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }

 private:
  ExactValue() = default;

  bool finite_ = false;
  Rational value_;
};

std::string to_string(const ExactValue& value);

// Outcome -> probability. Zero-probability outcomes are never stored; looking
// one up returns zero.
class ExactPmf {
 public:
  using Map = std::map<Outcome, Rational>;

  ExactPmf() = default;
  // Drops zero entries. Throws DomainError if an entry lies outside [0, 1]
  // or the total exceeds one.
  explicit ExactPmf(Map entries);

  static ExactPmf point_mass(Outcome x);

  Rational at(Outcome x) const;
  Rational total_mass() const;

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  Outcome min_outcome() const;
  Outcome max_outcome() const;

  Map::const_iterator begin() const { return entries_.begin(); }
  Map::const_iterator end() const { return entries_.end(); }
  const Map& entries() const { return entries_; }

  friend bool operator==(const ExactPmf&, const ExactPmf&) = default;

 private:
  Map entries_;
};

// The law of an unbounded variable restricted to outcomes <= x_max, with the
// exact mass left out recorded as tail_mass. Entries plus tail sum to one.
class TruncatedPmf {
 public:
  // Throws DomainError unless every key is <= x_max, the tail is
  // non-negative and the total is exactly one.
  TruncatedPmf(ExactPmf entries, Outcome x_max, Rational tail_mass);

  // A complete law: tail zero, cutoff at the largest outcome.
  static TruncatedPmf complete(ExactPmf entries);

  const ExactPmf& entries() const { return entries_; }
  Outcome x_max() const { return x_max_; }
  const Rational& tail_mass() const { return tail_mass_; }
  Rational at(Outcome x) const { return entries_.at(x); }

 private:
  ExactPmf entries_;
  Outcome x_max_;
  Rational tail_mass_;
};

struct SimSummary {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::uint64_t max_rounds = 0;
  // Over completed samples only. NaN when nothing completed.
  double mean = 0.0;
  double variance = 0.0;
  double ci99_low = 0.0;
  double ci99_high = 0.0;
  std::map<Outcome, std::uint64_t> histogram;
  std::uint64_t max_rounds_hit = 0;

  std::uint64_t completed() const { return samples - max_rounds_hit; }

  friend bool operator==(const SimSummary&, const SimSummary&) = default;
};

}  // namespace matchdice

#endif  // MATCHDICE_MODEL_H_
