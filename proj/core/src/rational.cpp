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

#include <algorithm>
#include <cctype>
#include <string>

#include "streamshare/error.hpp"

namespace streamshare {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

std::string to_fraction_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  bool negative = false;
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw Error(Errc::kParse, "malformed fraction '" + std::string(text) + "'");
  }
  const BigInt num(std::string{num_text});
  const BigInt den(std::string{den_text});
  if (den == 0) {
    throw Error(Errc::kParse, "zero denominator in '" + std::string(text) + "'");
  }
  Rational out(num, den);
  return negative ? Rational(-out) : out;
}

std::string to_decimal_string(const Rational& value, int precision) {
  precision = std::max(precision, 0);
  BigInt scale = 1;
  for (int k = 0; k < precision; ++k) scale *= 10;

  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  const bool negative = num < 0;
  const BigInt magnitude = negative ? BigInt(-num) : num;
  // round(|v| * scale), halves away from zero
  const BigInt scaled = (2 * magnitude * scale + den) / (2 * den);

  std::string whole = BigInt(scaled / scale).str();
  std::string frac = BigInt(scaled % scale).str();
  if (precision > 0) {
    frac.insert(0, static_cast<std::size_t>(precision) - frac.size(), '0');
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
  } else {
    frac.clear();
  }

  std::string out = (negative && scaled != 0) ? "-" : "";
  out += whole;
  if (!frac.empty()) out += "." + frac;
  return out;
}

}  // namespace streamshare
