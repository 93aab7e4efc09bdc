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

// Seeded, reproducible sampling of the exploding scheme.
//
// Streams: sample indices are cut into fixed blocks of kBlockSize. Block b is
// drawn from std::mt19937_64 seeded through std::seed_seq with the 32-bit
// words (seed lo, seed hi, b lo, b hi). Workers take blocks round-robin and
// the per-block tallies (integer sums and histograms) are merged in block
// order, so the summary depends on (spec, samples, seed, max_rounds) only.

#ifndef MATCHDICE_MONTECARLO_H_
#define MATCHDICE_MONTECARLO_H_

#include <concepts>
#include <cstdint>
#include <optional>
#include <random>

#include "matchdice/model.h"

namespace matchdice {

struct SamplerConfig {
  DiceSpec spec;
  std::uint64_t samples = 1;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::uint64_t max_rounds = 1000;
};

inline constexpr std::uint64_t kBlockSize = 1 << 16;

// Exactly uniform face in {1..sides}: draws below the largest multiple of
// sides in the generator's range are accepted, the rest redrawn.
int uniform_face(std::mt19937_64& engine, int sides);

// The generator used for block b of a run seeded with seed.
std::mt19937_64 block_engine(std::uint64_t seed, std::uint64_t block);

// Rolls rounds of n faces drawn from roll() until a round is not a match and
// returns the total of every face. Returns nullopt once max_rounds rounds in
// a row have matched.
template <typename FaceSource>
  requires std::invocable<FaceSource&> &&
           std::convertible_to<std::invoke_result_t<FaceSource&>, int>
std::optional<Outcome> sample_once(const DiceSpec& spec, FaceSource&& roll,
                                   std::uint64_t max_rounds) {
  if (spec.has_no_dice()) return 0;
  Outcome total = 0;
  for (std::uint64_t matched = 0; matched < max_rounds;) {
    const int first = roll();
    bool all_equal = true;
    total += first;
    for (int l = 1; l < spec.n; ++l) {
      const int face = roll();
      all_equal = all_equal && face == first;
      total += face;
    }
    if (!all_equal) return total;
    ++matched;
  }
  return std::nullopt;
}

inline std::optional<Outcome> sample_once(const DiceSpec& spec,
                                          std::mt19937_64& engine,
                                          std::uint64_t max_rounds) {
  return sample_once(
      spec, [&engine, &spec] { return uniform_face(engine, spec.s); },
      max_rounds);
}

// Throws ValidationError for zero samples, workers or max_rounds.
SimSummary simulate(const SamplerConfig& config);

}  // namespace matchdice

#endif  // MATCHDICE_MONTECARLO_H_
