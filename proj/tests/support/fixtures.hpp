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

#ifndef STREAMSHARE_TESTS_SUPPORT_FIXTURES_HPP_
#define STREAMSHARE_TESTS_SUPPORT_FIXTURES_HPP_

#include <string>
#include <vector>

#include "streamshare/problem.hpp"
#include "streamshare/rational.hpp"
#include "support/oracles.hpp"

namespace fixtures {

using streamshare::Rational;
using streamshare::StreamingProblem;

// Artists "1".."n", users "a", "b", ...; rows are artists.
inline StreamingProblem make(const oracle::Matrix& t) {
  std::vector<std::string> artists;
  for (std::size_t a = 0; a < t.size(); ++a) artists.push_back(std::to_string(a + 1));
  std::vector<std::string> users;
  for (std::size_t u = 0; u < t.front().size(); ++u) users.push_back(std::string(1, char('a' + u)));
  std::vector<std::vector<streamshare::StreamCount>> rows;
  for (const auto& row : t) rows.emplace_back(row.begin(), row.end());
  return StreamingProblem::build(artists, users, rows);
}

// 100 0 10 / 0 10 20: the running example, users a, b, c.
inline StreamingProblem example1() { return make({{100, 0, 10}, {0, 10, 20}}); }

inline oracle::Matrix matrix_of(const StreamingProblem& p) {
  oracle::Matrix t(p.artist_count(), std::vector<long long>(p.user_count()));
  for (std::size_t a = 0; a < p.artist_count(); ++a) {
    for (std::size_t u = 0; u < p.user_count(); ++u) t[a][u] = p.stream(a, u);
  }
  return t;
}

inline std::vector<Rational> rationals(std::initializer_list<Rational> xs) { return xs; }

inline Rational q(long long num, long long den = 1) { return Rational(num, den); }

}  // namespace fixtures

#endif  // STREAMSHARE_TESTS_SUPPORT_FIXTURES_HPP_
