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

// Dice expressions:
//
//   expr  := count ('d' | 'D') sides '!'?
//   count := decimal integer in 0..50
//   sides := decimal integer in 1..10000
//
// Surrounding whitespace is ignored; nothing else may appear. A trailing '!'
// selects the match-and-reroll scheme, its absence a single roll.

#ifndef MATCHDICE_NOTATION_H_
#define MATCHDICE_NOTATION_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "matchdice/model.h"

namespace matchdice {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::string expected, std::string found);

  // 0-based byte offset into the original input.
  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t position_;
  std::string expected_;
  std::string found_;
};

// Throws ParseError on any deviation from the grammar.
RollExpression parse(std::string_view input);

// Canonical form "NdS" or "NdS!".
std::string format(const RollExpression& expr);

}  // namespace matchdice

#endif  // MATCHDICE_NOTATION_H_
