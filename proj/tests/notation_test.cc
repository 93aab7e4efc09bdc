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

#include "matchdice/notation.h"

#include <random>
#include <regex>

#include "gtest/gtest.h"

namespace matchdice {
namespace {

TEST(Parse, Examples) {
  EXPECT_EQ(parse("3d6!"), (RollExpression{{3, 6}, true}));
  EXPECT_EQ(parse("2D6"), (RollExpression{{2, 6}, false}));
  EXPECT_EQ(parse("0d6!"), (RollExpression{{0, 6}, true}));
  EXPECT_EQ(parse("  50d10000!\t"), (RollExpression{{50, 10000}, true}));
  EXPECT_EQ(parse("007d01"), (RollExpression{{7, 1}, false}));
}

TEST(Parse, CountIsRequired) {
  try {
    parse("d6");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 0u);
    EXPECT_EQ(e.expected(), "count");
    EXPECT_EQ(e.found(), "'d'");
  }
}

TEST(Parse, SidesOutOfRange) {
  try {
    parse("3d0!");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
    EXPECT_EQ(e.expected(), "1..10000");
    EXPECT_EQ(e.found(), "0");
  }
}

struct BadInput {
  const char* text;
  std::size_t position;
  const char* expected;
};

TEST(Parse, InvalidCorpus) {
  const BadInput corpus[] = {
      {"", 0, "count"},
      {"   ", 3, "count"},
      {"d6", 0, "count"},
      {"3d", 2, "sides"},
      {"3d6!!", 4, "end of input"},
      {"3 d6", 1, "'d'"},
      {"3d10001", 2, "1..10000"},
      {"3d0!", 2, "1..10000"},
      {"51d6", 0, "0..50"},
      {"99999999999999999999d6", 0, "0..50"},
      {"3d6+2", 3, "'!' or end of input"},
      {"-3d6", 0, "count"},
      {"3x6", 1, "'d'"},
      {"3d!6", 2, "sides"},
      {"!3d6", 0, "count"},
      {"3d6 !", 3, "'!' or end of input"},
      {"3dd6", 2, "sides"},
      {"3d-6", 2, "sides"},
      {"3d6!x", 4, "end of input"},
      {"abc", 0, "count"},
      {"3", 1, "'d'"},
      {"  3d6 2", 5, "'!' or end of input"},
      {"3d6k1", 3, "'!' or end of input"},
  };
  for (const BadInput& bad : corpus) {
    try {
      parse(bad.text);
      ADD_FAILURE() << "accepted '" << bad.text << "'";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.position(), bad.position) << "'" << bad.text << "'";
      EXPECT_EQ(e.expected(), bad.expected) << "'" << bad.text << "'";
      EXPECT_LE(e.position(), std::string(bad.text).size());
    }
  }
}

TEST(Format, Canonical) {
  EXPECT_EQ(format({{3, 6}, true}), "3d6!");
  EXPECT_EQ(format({{2, 6}, false}), "2d6");
  EXPECT_EQ(format({{0, 6}, true}), "0d6!");
}

TEST(Format, ParseRoundTrip) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> sides(1, kMaxSides);
  for (int n = 0; n <= kMaxDice; ++n) {
    std::vector<int> side_values{1, 2, 6, kMaxSides};
    for (int i = 0; i < 200; ++i) side_values.push_back(sides(rng));
    for (int s : side_values) {
      for (bool explode : {false, true}) {
        const RollExpression e{{n, s}, explode};
        ASSERT_EQ(parse(format(e)), e) << format(e);
      }
    }
  }
}

TEST(Format, CanonicalizationIsIdempotent) {
  std::mt19937_64 rng(17);
  const char* pads[] = {"", " ", "\t", "  \n"};
  for (int i = 0; i < 2000; ++i) {
    const int n = static_cast<int>(rng() % (kMaxDice + 1));
    const int s = 1 + static_cast<int>(rng() % kMaxSides);
    std::string text = pads[rng() % 4];
    text += std::string(rng() % 3, '0') + std::to_string(n);
    text += (rng() % 2) ? 'd' : 'D';
    text += std::string(rng() % 3, '0') + std::to_string(s);
    if (rng() % 2) text += '!';
    text += pads[rng() % 4];
    const std::string canonical = format(parse(text));
    EXPECT_EQ(format(parse(canonical)), canonical);
    EXPECT_EQ(parse(canonical), parse(text));
  }
}

// Whatever the input, parse either returns exactly what a reference regex
// accepts or throws ParseError.
TEST(Parse, AcceptsExactlyTheGrammar) {
  static const std::regex grammar(
      "[ \\t\\n\\r\\f\\v]*([0-9]+)[dD]([0-9]+)(!?)[ \\t\\n\\r\\f\\v]*");
  const std::string alphabet = "0123456789dD! +-x0123456789";
  std::mt19937_64 rng(99);
  int accepted = 0;
  for (int i = 0; i < 50000; ++i) {
    std::string text;
    const std::size_t len = rng() % 8;
    for (std::size_t k = 0; k < len; ++k) text += alphabet[rng() % alphabet.size()];
    std::smatch m;
    bool expect_ok = std::regex_match(text, m, grammar);
    if (expect_ok) {
      const std::string n_digits = m[1];
      const std::string s_digits = m[2];
      expect_ok = n_digits.size() <= 6 && s_digits.size() <= 6 &&
                  std::stoi(n_digits) <= kMaxDice && std::stoi(s_digits) >= 1 &&
                  std::stoi(s_digits) <= kMaxSides;
    }
    try {
      const RollExpression e = parse(text);
      ASSERT_TRUE(expect_ok) << "accepted '" << text << "'";
      EXPECT_EQ(e.spec.n, std::stoi(m[1]));
      EXPECT_EQ(e.spec.s, std::stoi(m[2]));
      EXPECT_EQ(e.explode, m[3].length() == 1);
      ++accepted;
    } catch (const ParseError& err) {
      ASSERT_FALSE(expect_ok) << "rejected '" << text << "': " << err.what();
      EXPECT_LE(err.position(), text.size());
    }
  }
  EXPECT_GT(accepted, 0);
}

}  // namespace
}  // namespace matchdice
