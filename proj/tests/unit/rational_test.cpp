// Copyright 2026 The streamshare Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "streamshare/rational.hpp"

#include <gtest/gtest.h>

#include "streamshare/error.hpp"

namespace streamshare {
namespace {

TEST(Rational, LowestTermsAndPositiveDenominator) {
  const Rational r = Rational(6) / Rational(-4);
  EXPECT_EQ(numerator(r), -3);
  EXPECT_EQ(denominator(r), 2);
}

TEST(Rational, FractionStrings) {
  EXPECT_EQ(to_fraction_string(Rational(33, 14)), "33/14");
  EXPECT_EQ(to_fraction_string(Rational(110)), "110");
  EXPECT_EQ(to_fraction_string(Rational(0)), "0");
  EXPECT_EQ(to_fraction_string(Rational(-1, 3)), "-1/3");
}

TEST(Rational, ParseRoundTrips) {
  for (const Rational& r : {Rational(33, 14), Rational(-7, 2), Rational(5), Rational(0)}) {
    EXPECT_EQ(parse_rational(to_fraction_string(r)), r);
  }
  EXPECT_EQ(parse_rational("2/4"), Rational(1, 2));
  EXPECT_EQ(parse_rational(" 3/6 "), Rational(1, 2));
}

TEST(Rational, ParseRejectsGarbage) {
  for (const char* bad : {"", "/", "1/", "/2", "1/0", "a/b", "1.5", "1//2", "1/2/3"}) {
    try {
      (void)parse_rational(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::kParse) << bad;
    }
  }
}

TEST(Rational, DecimalDisplayRoundsHalfAwayFromZero) {
  EXPECT_EQ(to_decimal_string(Rational(33, 14), 2), "2.36");
  EXPECT_EQ(to_decimal_string(Rational(9, 14), 2), "0.64");
  EXPECT_EQ(to_decimal_string(Rational(4, 3), 2), "1.33");
  EXPECT_EQ(to_decimal_string(Rational(5, 3), 2), "1.67");
  EXPECT_EQ(to_decimal_string(Rational(3, 2), 2), "1.5");
  EXPECT_EQ(to_decimal_string(Rational(1, 8), 2), "0.13");
  EXPECT_EQ(to_decimal_string(Rational(-1, 8), 2), "-0.13");
  EXPECT_EQ(to_decimal_string(Rational(3), 2), "3");
  EXPECT_EQ(to_decimal_string(Rational(5, 2), 0), "3");
  EXPECT_EQ(to_decimal_string(Rational(1, 3), 6), "0.333333");
}

}  // namespace
}  // namespace streamshare
