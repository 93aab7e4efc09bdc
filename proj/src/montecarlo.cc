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

#include "matchdice/montecarlo.h"

#include <cmath>
#include <limits>
#include <thread>
#include <vector>

namespace matchdice {
namespace {

// Two-sided 99% standard normal quantile.
constexpr long double kZ99 = 2.5758293035489004L;

struct BlockTally {
  __int128 sum = 0;
  unsigned __int128 sum_squares = 0;
  std::map<Outcome, std::uint64_t> histogram;
  std::uint64_t aborted = 0;
};

BlockTally run_block(const SamplerConfig& config, std::uint64_t block) {
  std::mt19937_64 engine = block_engine(config.seed, block);
  const std::uint64_t first = block * kBlockSize;
  const std::uint64_t last = std::min(config.samples, first + kBlockSize);
  BlockTally tally;
  for (std::uint64_t i = first; i < last; ++i) {
    auto x = sample_once(config.spec, engine, config.max_rounds);
    if (!x) {
      ++tally.aborted;
      continue;
    }
    tally.sum += *x;
    tally.sum_squares += static_cast<unsigned __int128>(*x) *
                         static_cast<unsigned __int128>(*x);
    ++tally.histogram[*x];
  }
  return tally;
}

}  // namespace

int uniform_face(std::mt19937_64& engine, int sides) {
  using Word = std::mt19937_64::result_type;
  static_assert(std::mt19937_64::min() == 0 &&
                std::mt19937_64::max() == std::numeric_limits<Word>::max());
  const auto range = static_cast<Word>(sides);
  // Largest multiple of range that fits: accept draws below it.
  const Word limit = std::numeric_limits<Word>::max() -
                     (std::numeric_limits<Word>::max() % range + 1) % range;
  Word draw;
  do {
    draw = engine();
  } while (draw > limit);
  return static_cast<int>(draw % range) + 1;
}

std::mt19937_64 block_engine(std::uint64_t seed, std::uint64_t block) {
  std::seed_seq words{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(block),
                      static_cast<std::uint32_t>(block >> 32)};
  return std::mt19937_64(words);
}

SimSummary simulate(const SamplerConfig& config) {
  if (config.samples == 0) throw ValidationError("samples", "samples must be positive");
  if (config.workers == 0) throw ValidationError("workers", "workers must be positive");
  if (config.max_rounds == 0) {
    throw ValidationError("max_rounds", "max_rounds must be positive");
  }

  const std::uint64_t blocks = (config.samples + kBlockSize - 1) / kBlockSize;
  std::vector<BlockTally> tallies(blocks);
  const auto workers =
      static_cast<unsigned>(std::min<std::uint64_t>(config.workers, blocks));
  if (workers <= 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) tallies[b] = run_block(config, b);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t b = w; b < blocks; b += workers) {
          tallies[b] = run_block(config, b);
        }
      });
    }
  }

  SimSummary summary;
  summary.samples = config.samples;
  summary.seed = config.seed;
  summary.workers = config.workers;
  summary.max_rounds = config.max_rounds;

  __int128 sum = 0;
  unsigned __int128 sum_squares = 0;
  for (const BlockTally& tally : tallies) {
    sum += tally.sum;
    sum_squares += tally.sum_squares;
    summary.max_rounds_hit += tally.aborted;
    for (const auto& [x, count] : tally.histogram) summary.histogram[x] += count;
  }

  const std::uint64_t completed = summary.completed();
  if (completed == 0) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    summary.mean = summary.variance = summary.ci99_low = summary.ci99_high = nan;
    return summary;
  }
  const long double count = static_cast<long double>(completed);
  const long double mean = static_cast<long double>(sum) / count;
  long double variance = 0;
  if (completed > 1) {
    // count * sum(x^2) - sum(x)^2 is exact in 128 bits.
    const auto scaled =
        static_cast<__int128>(sum_squares) * static_cast<__int128>(completed) -
        sum * sum;
    variance = static_cast<long double>(scaled) / (count * (count - 1));
  }
  const long double half_width = kZ99 * std::sqrt(variance / count);
  summary.mean = static_cast<double>(mean);
  summary.variance = static_cast<double>(variance);
  summary.ci99_low = static_cast<double>(mean - half_width);
  summary.ci99_high = static_cast<double>(mean + half_width);
  return summary;
}

}  // namespace matchdice
