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

#ifndef STREAMSHARE_TESTS_SUPPORT_ORACLES_HPP_
#define STREAMSHARE_TESTS_SUPPORT_ORACLES_HPP_

// Test-only oracles. Nothing here calls into the library: fractions are a
// small int64 type, indices are evaluated straight from their formulas on
// plain matrices, and the Shapley value is averaged over all orderings.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "streamshare/rational.hpp"

namespace oracle {

struct Frac {
  long long num = 0;
  long long den = 1;

  Frac() = default;
  Frac(long long n, long long d = 1) : num(n), den(d) {  // NOLINT(runtime/explicit)
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Frac operator+(Frac a, Frac b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend Frac operator-(Frac a, Frac b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Frac operator*(Frac a, Frac b) { return {a.num * b.num, a.den * b.den}; }
  friend Frac operator/(Frac a, Frac b) { return {a.num * b.den, a.den * b.num}; }
  Frac& operator+=(Frac b) { return *this = *this + b; }
  friend bool operator==(Frac a, Frac b) { return a.num == b.num && a.den == b.den; }

  streamshare::Rational to_rational() const { return streamshare::Rational(num, den); }
};

using Matrix = std::vector<std::vector<long long>>;  // rows = artists

inline long long row_sum(const Matrix& t, std::size_t i) {
  return std::accumulate(t[i].begin(), t[i].end(), 0LL);
}
inline long long col_sum(const Matrix& t, std::size_t j) {
  long long s = 0;
  for (const auto& row : t) s += row[j];
  return s;
}
inline long long grand(const Matrix& t) {
  long long s = 0;
  for (std::size_t i = 0; i < t.size(); ++i) s += row_sum(t, i);
  return s;
}

inline std::vector<Frac> pro_rata(const Matrix& t) {
  std::vector<Frac> out;
  for (std::size_t i = 0; i < t.size(); ++i) out.emplace_back(row_sum(t, i));
  return out;
}

inline std::vector<Frac> user_centric(const Matrix& t) {
  std::vector<Frac> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t[i].size(); ++j) out[i] += Frac(t[i][j], col_sum(t, j));
  }
  return out;
}

inline std::vector<Frac> shapley(const Matrix& t) {
  std::vector<Frac> out(t.size());
  for (std::size_t j = 0; j < t.front().size(); ++j) {
    long long listed = 0;
    for (const auto& row : t) listed += row[j] > 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i][j] > 0) out[i] += Frac(1, listed);
    }
  }
  return out;
}

inline std::vector<Frac> reward(const std::vector<Frac>& index, long long users) {
  Frac total;
  for (auto v : index) total += v;
  std::vector<Frac> out;
  for (auto v : index) out.push_back(v * Frac(users) / total);
  return out;
}

inline std::vector<Frac> squared_blend(const Matrix& t) {
  std::vector<Frac> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      out[i] += Frac(t[i][j] + row_sum(t, i), col_sum(t, j) + grand(t));
    }
  }
  return out;
}

// Shapley value as the average marginal contribution over all n! orders.
inline std::vector<Frac> shapley_by_permutations(std::size_t n,
                                                 const std::function<Frac(unsigned)>& v) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Frac> total(n);
  long long orders = 0;
  do {
    unsigned before = 0;
    for (std::size_t player : order) {
      const unsigned with = before | (1u << player);
      total[player] += v(with) - v(before);
      before = with;
    }
    ++orders;
  } while (std::next_permutation(order.begin(), order.end()));
  for (auto& x : total) x = x / Frac(orders);
  return total;
}

inline std::vector<streamshare::Rational> to_rationals(const std::vector<Frac>& xs) {
  std::vector<streamshare::Rational> out;
  for (auto x : xs) out.push_back(x.to_rational());
  return out;
}

}  // namespace oracle

#endif  // STREAMSHARE_TESTS_SUPPORT_ORACLES_HPP_
