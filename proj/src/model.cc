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

#include "matchdice/model.h"

#include <string>
#include <utility>

namespace matchdice {

DiceSpec validate_spec(long long n, long long s) {
  if (n < 0) throw ValidationError("n", "n must be non-negative");
  if (n > kMaxDice) {
    throw ValidationError("n", "n exceeds " + std::to_string(kMaxDice));
  }
  if (s < 1) throw ValidationError("s", "s must be at least 1");
  if (s > kMaxSides) {
    throw ValidationError("s", "s exceeds " + std::to_string(kMaxSides));
  }
  return DiceSpec{static_cast<int>(n), static_cast<int>(s)};
}

ExactValue ExactValue::finite(Rational value) {
  value.canonicalize();
  ExactValue result;
  result.finite_ = true;
  result.value_ = std::move(value);
  return result;
}

const Rational& ExactValue::value() const {
  if (!finite_) throw DomainError("value is divergent");
  return value_;
}

std::string to_string(const ExactValue& value) {
  return value.is_finite() ? value.value().get_str() : "divergent";
}

ExactPmf::ExactPmf(Map entries) {
  Rational total = 0;
  for (auto& [x, p] : entries) {
    p.canonicalize();
    if (sgn(p) == 0) continue;
    if (sgn(p) < 0 || p > 1) {
      throw DomainError("probability at " + std::to_string(x) +
                        " outside [0, 1]: " + p.get_str());
    }
    total += p;
    entries_.emplace(x, std::move(p));
  }
  if (total > 1) {
    throw DomainError("total mass exceeds one: " + total.get_str());
  }
}

ExactPmf ExactPmf::point_mass(Outcome x) {
  return ExactPmf(Map{{x, Rational(1)}});
}

Rational ExactPmf::at(Outcome x) const {
  auto it = entries_.find(x);
  return it == entries_.end() ? Rational(0) : it->second;
}

Rational ExactPmf::total_mass() const {
  Rational total = 0;
  for (const auto& [x, p] : entries_) total += p;
  return total;
}

Outcome ExactPmf::min_outcome() const {
  if (entries_.empty()) throw DomainError("empty PMF has no support");
  return entries_.begin()->first;
}

Outcome ExactPmf::max_outcome() const {
  if (entries_.empty()) throw DomainError("empty PMF has no support");
  return entries_.rbegin()->first;
}

TruncatedPmf::TruncatedPmf(ExactPmf entries, Outcome x_max, Rational tail_mass)
    : entries_(std::move(entries)),
      x_max_(x_max),
      tail_mass_(std::move(tail_mass)) {
  tail_mass_.canonicalize();
  if (!entries_.empty() && entries_.max_outcome() > x_max_) {
    throw DomainError("outcome above cutoff " + std::to_string(x_max_));
  }
  if (sgn(tail_mass_) < 0) throw DomainError("negative tail mass");
  if (entries_.total_mass() + tail_mass_ != 1) {
    throw DomainError("entries plus tail do not sum to one");
  }
}

TruncatedPmf TruncatedPmf::complete(ExactPmf entries) {
  Outcome x_max = entries.empty() ? 0 : entries.max_outcome();
  return TruncatedPmf(std::move(entries), x_max, Rational(0));
}

}  // namespace matchdice
