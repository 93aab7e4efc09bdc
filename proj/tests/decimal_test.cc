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

#include "matchdice/decimal.h"

#include "gtest/gtest.h"

namespace matchdice {
namespace {

Rational Q(const char* text) {
  Rational r(text);
  r.canonicalize();
  return r;
}

TEST(FormatDecimal, PaperValues) {
  EXPECT_EQ(format_decimal(Q("54/5")), "10.8");
  EXPECT_EQ(format_decimal(Q("42/5")), "8.4");
  EXPECT_EQ(format_decimal(Q("21/2")), "10.5");
  EXPECT_EQ(format_decimal(Q("7")), "7.0");
}

TEST(FormatDecimal, SignificantDigits) {
  EXPECT_EQ(format_decimal(Q("1/3")), "0.333333");
  EXPECT_EQ(format_decimal(Q("2/3")), "0.666667");
  EXPECT_EQ(format_decimal(Q("1/36")), "0.0277778");
  EXPECT_EQ(format_decimal(Q("123456789")), "123457000.0");
  EXPECT_EQ(format_decimal(Q("1/3"), 2), "0.33");
  EXPECT_EQ(format_decimal(Q("-7/5")), "-1.4");
  EXPECT_EQ(format_decimal(Q("0")), "0.0");
  EXPECT_THROW(format_decimal(Q("1"), 0), std::invalid_argument);
}

TEST(FormatDecimal, RoundsHalfToEven) {
  EXPECT_EQ(format_decimal(Q("1/8"), 2), "0.12");
  EXPECT_EQ(format_decimal(Q("3/8"), 2), "0.38");
  EXPECT_EQ(format_decimal(Q("25/2"), 2), "12.0");
  EXPECT_EQ(format_decimal(Q("5/2"), 1), "2.0");
  EXPECT_EQ(format_decimal(Q("7/2"), 1), "4.0");
  // Just above a half rounds up even when the kept digit is even.
  EXPECT_EQ(format_decimal(Q("1250001/10000000"), 2), "0.13");
}

TEST(FormatDecimal, CarryIntoNewDigit) {
  EXPECT_EQ(format_decimal(Q("9999999/1000000")), "10.0");
  EXPECT_EQ(format_decimal(Q("99999999/100000000"), 3), "1.0");
}

TEST(FormatDecimal, TinyValuesUseExponent) {
  EXPECT_EQ(format_decimal(Q("1/1267650600228229401496703205376")),
            "7.88861e-31");
  EXPECT_EQ(format_decimal(Q("1/10000000")), "1e-7");
  EXPECT_EQ(format_decimal(Q("1/1000000")), "0.000001");
  EXPECT_EQ(format_decimal(Q("7/32")), "0.21875");
}

}  // namespace
}  // namespace matchdice
