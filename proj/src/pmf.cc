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

#include "matchdice/pmf.h"

#include <string>
#include <utility>
#include <vector>

#include "matchdice/powers.h"

namespace matchdice {
namespace {

// Number of the s^n ordered rolls that sum to each value 0..n s. Each die is
// folded in as a convolution with the uniform {1..s} kernel, evaluated as a
// running window sum.
std::vector<Integer> single_round_counts(const DiceSpec& spec) {
  const std::size_t s = spec.s;
  std::vector<Integer> counts(1, Integer(1));
  for (int die = 0; die < spec.n; ++die) {
    std::vector<Integer> next(counts.size() + s);
    Integer window = 0;  // sum of counts[x - s .. x - 1]
    for (std::size_t x = 1; x < next.size(); ++x) {
      if (x - 1 < counts.size()) window += counts[x - 1];
      if (x >= s + 1 && x - s - 1 < counts.size()) window -= counts[x - s - 1];
      next[x] = window;
    }
    counts = std::move(next);
  }
  return counts;
}

void require_nonmatch_possible(const DiceSpec& spec) {
  if (spec.n <= 1) throw DomainError("non-match event is empty");
}

std::vector<Integer> nonmatch_counts(const DiceSpec& spec) {
  require_nonmatch_possible(spec);
  std::vector<Integer> counts = single_round_counts(spec);
  for (int v = 1; v <= spec.s; ++v) counts[spec.n * v] -= 1;
  return counts;
}

ExactPmf pmf_from_counts(const std::vector<Integer>& counts,
                         const Integer& total) {
  ExactPmf::Map entries;
  for (std::size_t x = 0; x < counts.size(); ++x) {
    if (sgn(counts[x]) == 0) continue;
    Rational p(counts[x], total);
    p.canonicalize();
    entries.emplace_hint(entries.end(), static_cast<Outcome>(x), std::move(p));
  }
  return ExactPmf(std::move(entries));
}

}  // namespace

ExactPmf single_round_pmf(const DiceSpec& spec) {
  if (spec.has_no_dice()) return ExactPmf::point_mass(0);
  return pmf_from_counts(single_round_counts(spec), pow_int(spec.s, spec.n));
}

ExactPmf nonmatch_subpmf(const DiceSpec& spec) {
  return pmf_from_counts(nonmatch_counts(spec), pow_int(spec.s, spec.n));
}

Outcome default_cutoff(const DiceSpec& spec) {
  return Outcome{40} * spec.n * spec.s;
}

TruncatedPmf exploding_pmf(const DiceSpec& spec,
                           std::optional<Outcome> x_max) {
  if (spec.has_no_dice() || spec.explodes_forever()) {
    throw DomainError("distribution divergent, no finite PMF");
  }
  const Outcome cutoff = x_max.value_or(default_cutoff(spec));
  const Outcome n = spec.n;
  const Outcome s = spec.s;
  if (cutoff < n + 1) {
    throw DomainError("cutoff below support minimum " + std::to_string(n + 1));
  }

  // Outcome x takes at most rounds(x) = floor((x - 1) / n) rounds, so with
  // S = s^n every P(x) is scaled[x] / S^rounds(x) for an integer scaled[x].
  // A match on face v moves from x - n v to x and adds exactly v rounds, so
  //
  //   scaled[x] = q_count[x] S^(rounds(x) - 1) + window[x],
  //   window[x] = sum_{v=1..s} scaled[x - n v] S^(v - 1),
  //
  // and window[x + n] = scaled[x] + S window[x] - scaled[x - n s] S^s.
  const Integer round_weight = pow_int(spec.s, spec.n);
  Integer round_weight_to_s;
  mpz_pow_ui(round_weight_to_s.get_mpz_t(), round_weight.get_mpz_t(),
             static_cast<unsigned long>(s));
  const std::vector<Integer> nonmatch = nonmatch_counts(spec);
  auto rounds = [n](Outcome x) { return (x - 1) / n; };

  std::vector<Integer> scaled(static_cast<std::size_t>(cutoff) + 1);
  std::vector<Integer> window(static_cast<std::size_t>(n));
  // retained = sum of P(x) so far, scaled by S^rounds(x).
  Integer retained = 0;
  Outcome retained_rounds = 0;
  Integer term;
  for (Outcome x = n + 1; x <= cutoff; ++x) {
    Integer& w = window[static_cast<std::size_t>(x % n)];
    Integer& a = scaled[static_cast<std::size_t>(x)];
    a = w;
    if (x < static_cast<Outcome>(nonmatch.size())) {
      const Integer& c = nonmatch[static_cast<std::size_t>(x)];
      if (sgn(c) != 0) {
        mpz_pow_ui(term.get_mpz_t(), round_weight.get_mpz_t(),
                   static_cast<unsigned long>(rounds(x) - 1));
        a += c * term;
      }
    }
    // Slide this residue class's window on to x + n.
    w *= round_weight;
    w += a;
    if (x - n * s > n) {
      w -= scaled[static_cast<std::size_t>(x - n * s)] * round_weight_to_s;
    }
    while (retained_rounds < rounds(x)) {
      retained *= round_weight;
      ++retained_rounds;
    }
    retained += a;
  }

  ExactPmf::Map entries;
  Integer denominator = 1;
  Outcome denominator_rounds = 0;
  for (Outcome x = n + 1; x <= cutoff; ++x) {
    Integer& a = scaled[static_cast<std::size_t>(x)];
    while (denominator_rounds < rounds(x)) {
      denominator *= round_weight;
      ++denominator_rounds;
    }
    if (sgn(a) == 0) continue;
    Rational p(std::move(a), denominator);
    p.canonicalize();
    entries.emplace_hint(entries.end(), x, std::move(p));
  }
  Rational retained_mass(retained, denominator);
  retained_mass.canonicalize();
  return TruncatedPmf(ExactPmf(std::move(entries)), cutoff,
                      1 - retained_mass);
}

Rational truncated_mean(const TruncatedPmf& pmf) {
  Rational mean = 0;
  for (const auto& [x, p] : pmf.entries()) mean += p * Rational(Integer(x));
  return mean;
}

Outcome cdf_quantile(const TruncatedPmf& pmf, const Rational& q) {
  if (sgn(q) < 0) throw DomainError("quantile below zero");
  if (q > 1 - pmf.tail_mass()) {
    throw DomainError("quantile beyond certified mass");
  }
  Rational cumulative = 0;
  for (const auto& [x, p] : pmf.entries()) {
    cumulative += p;
    if (cumulative >= q) return x;
  }
  throw DomainError("quantile of an empty PMF");
}

bool oracle_depth_in_budget(const DiceSpec& spec, int depth) {
  if (depth < 1 || spec.s < 1) return false;
  std::uint64_t work = 1;
  for (int i = 0; i < depth + spec.n; ++i) {
    work *= static_cast<std::uint64_t>(spec.s);
    if (work > kOracleBudget) return false;
  }
  return true;
}

std::optional<int> max_oracle_depth(const DiceSpec& spec) {
  if (!oracle_depth_in_budget(spec, 1)) return std::nullopt;
  int depth = 1;
  while (oracle_depth_in_budget(spec, depth + 1)) ++depth;
  return depth;
}

Outcome oracle_exact_below(const DiceSpec& spec, int depth) {
  return Outcome{spec.n} * depth + spec.n + 1;
}

namespace {

// Walks every history of dice rolls, one full round of s^n ordered rolls at a
// time. closing[k][x] counts histories with k matches whose total is x; each
// such history has probability s^(-n (k + 1)).
class HistoryWalker {
 public:
  HistoryWalker(const DiceSpec& spec, int depth)
      : n_(spec.n),
        s_(spec.s),
        depth_(depth),
        closing_(static_cast<std::size_t>(depth),
                 std::vector<std::uint64_t>(
                     static_cast<std::size_t>(spec.n) * spec.s * depth + 1)),
        faces_(static_cast<std::size_t>(depth),
               std::vector<int>(static_cast<std::size_t>(spec.n))) {}

  void walk(int matches, Outcome total) {
    std::vector<int>& faces = faces_[static_cast<std::size_t>(matches)];
    std::fill(faces.begin(), faces.end(), 1);
    Outcome sum = n_;
    while (true) {
      ++paths_;
      bool all_equal = true;
      for (int l = 1; l < n_ && all_equal; ++l) all_equal = faces[l] == faces[0];
      if (!all_equal) {
        ++closing_[static_cast<std::size_t>(matches)]
                  [static_cast<std::size_t>(total + sum)];
      } else if (matches + 1 < depth_) {
        walk(matches + 1, total + sum);
      }
      // Next roll in odometer order.
      int l = 0;
      while (l < n_ && faces[l] == s_) {
        faces[l] = 1;
        sum -= s_ - 1;
        ++l;
      }
      if (l == n_) break;
      ++faces[l];
      ++sum;
    }
  }

  const std::vector<std::vector<std::uint64_t>>& closing() const {
    return closing_;
  }
  std::uint64_t paths() const { return paths_; }

 private:
  int n_;
  int s_;
  int depth_;
  std::vector<std::vector<std::uint64_t>> closing_;
  std::vector<std::vector<int>> faces_;
  std::uint64_t paths_ = 0;
};

}  // namespace

EnumerationResult enumerate_oracle(const DiceSpec& spec, int depth) {
  if (!spec.is_regular()) {
    throw DomainError("oracle requires at least two dice with two sides");
  }
  if (depth < 1) throw DomainError("oracle depth must be positive");
  if (!oracle_depth_in_budget(spec, depth)) {
    throw DomainError("oracle budget exceeded: s^(depth+n) > " +
                      std::to_string(kOracleBudget));
  }

  HistoryWalker walker(spec, depth);
  walker.walk(0, 0);

  const std::size_t width = walker.closing().front().size();
  ExactPmf::Map entries;
  for (std::size_t x = 0; x < width; ++x) {
    Rational p = 0;
    for (int k = 0; k < depth; ++k) {
      const std::uint64_t c = walker.closing()[static_cast<std::size_t>(k)][x];
      if (c == 0) continue;
      Rational term{Integer(c), pow_int(spec.s, static_cast<unsigned long>(
                                                    spec.n * (k + 1)))};
      term.canonicalize();
      p += term;
    }
    if (sgn(p) != 0) entries.emplace(static_cast<Outcome>(x), std::move(p));
  }

  Rational tail(Integer(1),
                pow_int(spec.s, static_cast<unsigned long>(spec.n - 1) *
                                    static_cast<unsigned long>(depth)));
  const auto x_max = static_cast<Outcome>(width - 1);
  return EnumerationResult{
      TruncatedPmf(ExactPmf(std::move(entries)), x_max, std::move(tail)),
      depth, walker.paths()};
}

}  // namespace matchdice
