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


namespace matchdice {
namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string describe(std::string_view input, std::size_t pos) {
  if (pos >= input.size()) return "end of input";
  return std::string("'") + input[pos] + "'";
}

class Parser {
 public:
  Parser(std::string_view input, std::size_t begin, std::size_t end)
      : input_(input), pos_(begin), end_(end) {}

  RollExpression run() {
    const long long n = number("count", 0, kMaxDice);
    if (pos_ >= end_ || (input_[pos_] != 'd' && input_[pos_] != 'D')) {
      fail("'d'");
    }
    ++pos_;
    const long long s = number("sides", 1, kMaxSides);
    bool explode = false;
    if (pos_ < end_ && input_[pos_] == '!') {
      explode = true;
      ++pos_;
    }
    if (pos_ < end_) fail(explode ? "end of input" : "'!' or end of input");
    return RollExpression{validate_spec(n, s), explode};
  }

 private:
  // Digits are consumed greedily; a value out of [lo, hi] is reported at the
  // first digit.
  long long number(const char* what, long long lo, long long hi) {
    const std::size_t start = pos_;
    if (pos_ >= end_ || !is_digit(input_[pos_])) fail(what);
    long long value = 0;
    bool overflow = false;
    while (pos_ < end_ && is_digit(input_[pos_])) {
      value = value * 10 + (input_[pos_] - '0');
      if (value > hi) {
        overflow = true;
        value = hi + 1;
      }
      ++pos_;
    }
    if (overflow || value < lo) {
      throw ParseError(start, std::to_string(lo) + ".." + std::to_string(hi),
                       std::string(input_.substr(start, pos_ - start)));
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(pos_, expected,
                     pos_ < end_ ? describe(input_, pos_) : "end of input");
  }

  std::string_view input_;
  std::size_t pos_;
  std::size_t end_;
};

}  // namespace

ParseError::ParseError(std::size_t position, std::string expected,
                       std::string found)
    : std::runtime_error("at position " + std::to_string(position) +
                         ": expected " + expected + ", found " + found),
      position_(position),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

RollExpression parse(std::string_view input) {
  std::size_t begin = 0;
  std::size_t end = input.size();
  while (begin < end && is_space(input[begin])) ++begin;
  while (end > begin && is_space(input[end - 1])) --end;
  return Parser(input, begin, end).run();
}

std::string format(const RollExpression& expr) {
  std::string text = std::to_string(expr.spec.n) + "d" +
                     std::to_string(expr.spec.s);
  if (expr.explode) text += '!';
  return text;
}

}  // namespace matchdice
