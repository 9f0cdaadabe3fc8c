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

#ifndef STREAMSHARE_RATIONAL_HPP_
#define STREAMSHARE_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace streamshare {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// "num/den", or just "num" when the denominator is 1.
std::string to_fraction_string(const Rational& value);

// Accepts "p", "-p" and "p/q". Throws Error(kParse) on malformed input or q == 0.
Rational parse_rational(std::string_view text);

// Decimal rendering for display only: rounds half away from zero at
// `precision` digits and trims trailing zeros ("1.5", "2.36", "3").
std::string to_decimal_string(const Rational& value, int precision);

}  // namespace streamshare

#endif  // STREAMSHARE_RATIONAL_HPP_
