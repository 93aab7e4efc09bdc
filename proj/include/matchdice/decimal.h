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

#ifndef MATCHDICE_DECIMAL_H_
#define MATCHDICE_DECIMAL_H_

#include <string>

#include "matchdice/model.h"

namespace matchdice {

// Renders value rounded half-to-even to significant_digits digits, straight
// from the exact rational. Trailing fractional zeros are dropped but one
// fractional digit is always kept ("7.0", "10.8"). Magnitudes below 1e-6 use
// exponent form ("7.88861e-31"). Throws std::invalid_argument when
// significant_digits < 1.
std::string format_decimal(const Rational& value, int significant_digits = 6);

}  // namespace matchdice

#endif  // MATCHDICE_DECIMAL_H_
