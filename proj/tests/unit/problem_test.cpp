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

#include "streamshare/problem.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "streamshare/error.hpp"
#include "streamshare/generator.hpp"
#include "support/fixtures.hpp"

namespace streamshare {
namespace {

using fixtures::example1;
using fixtures::make;
using Ids = std::vector<std::string>;

Errc build_error(const Ids& artists, const Ids& users,
                 const std::vector<std::vector<StreamCount>>& t) {
  try {
    (void)StreamingProblem::build(artists, users, t);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "build succeeded";
  return Errc::kParse;
}

TEST(Problem, ExampleOneTotals) {
  const auto p = example1();
  EXPECT_EQ(p.artist_total("1"), 110);
  EXPECT_EQ(p.artist_total("2"), 30);
  EXPECT_EQ(p.user_total("a"), 100);
  EXPECT_EQ(p.user_total("c"), 30);
  EXPECT_EQ(p.grand_total(), 140);
  EXPECT_EQ(make({{5}}).user_total("a"), 5);
}

TEST(Problem, FansAndArtistLists) {
  const auto p = example1();
  EXPECT_EQ(p.fans("1"), (Ids{"a", "c"}));
  EXPECT_EQ(p.fans("2"), (Ids{"b", "c"}));
  EXPECT_EQ(p.artist_list("c"), (Ids{"1", "2"}));
  EXPECT_EQ(p.artist_list("a"), (Ids{"1"}));
  EXPECT_TRUE(make({{0, 0}, {1, 2}}).fans("1").empty());
}

TEST(Problem, Profiles) {
  const auto p = example1();
  EXPECT_EQ(p.profile("c"), (std::vector<StreamCount>{10, 20}));
  EXPECT_EQ(p.profile("b"), (std::vector<StreamCount>{0, 10}));
  EXPECT_EQ(make({{7, 3}}).profile("b"), (std::vector<StreamCount>{3}));
}

TEST(Problem, BuildErrors) {
  EXPECT_EQ(build_error({"1"}, {"a"}, {{0}}), Errc::kEmptyUserColumn);
  EXPECT_EQ(build_error({"1", "2"}, {"a"}, {{3}, {-1}}), Errc::kNegativeOrNonIntegerStream);
  EXPECT_EQ(build_error({"1", "2"}, {"a"}, {{3}}), Errc::kDimensionMismatch);
  EXPECT_EQ(build_error({"1"}, {"a", "b"}, {{3}}), Errc::kDimensionMismatch);
  EXPECT_EQ(build_error({"1", "1"}, {"a"}, {{3}, {1}}), Errc::kDuplicateId);
  EXPECT_EQ(build_error({"1"}, {"a", "a"}, {{3, 1}}), Errc::kDuplicateId);
}

TEST(Problem, EmptyUserColumnNamesTheUser) {
  try {
    (void)make({{1, 0, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("'b'"), std::string::npos) << e.what();
  }
}

TEST(Problem, UnknownIds) {
  const auto p = example1();
  try {
    (void)p.artist_total("9");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kUnknownArtist);
  }
  try {
    (void)p.user_total("z");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kUnknownUser);
  }
}

TEST(Problem, RemoveUser) {
  const auto p = example1().without_user("a");
  EXPECT_EQ(p, StreamingProblem::build({"1", "2"}, {"b", "c"}, {{0, 10}, {10, 20}}));
  try {
    (void)make({{1}}).without_user("a");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kWouldEmptyProblem);
  }
}

TEST(Problem, RemoveArtist) {
  try {
    (void)example1().without_artist("2");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kEmptyUserColumn);
    EXPECT_NE(std::string(e.what()).find("'b'"), std::string::npos) << e.what();
  }
  const Ids only_c = {"c"};
  const auto sub = example1().with_users(only_c).without_artist("1");
  EXPECT_EQ(sub, StreamingProblem::build({"2"}, {"c"}, {{20}}));
}

// Property: totals agree, fans and artist lists are mutually consistent,
// and dropping a user keeps every other column unchanged.
TEST(Problem, GeneratedInvariants) {
  ProblemGenerator gen;
  gen.seed = 7;
  gen.max_artists = 5;
  gen.max_users = 6;
  for (std::uint64_t k = 0; k < 200; ++k) {
    const auto p = generate_problem(gen, k);
    StreamCount rows = 0;
    StreamCount cols = 0;
    for (const auto& a : p.artists()) rows += p.artist_total(a);
    for (const auto& u : p.users()) cols += p.user_total(u);
    ASSERT_EQ(rows, cols);
    ASSERT_EQ(rows, p.grand_total());
    for (const auto& a : p.artists()) {
      for (const auto& u : p.users()) {
        const auto fans = p.fans(a);
        const auto list = p.artist_list(u);
        const bool is_fan = std::find(fans.begin(), fans.end(), u) != fans.end();
        const bool listed = std::find(list.begin(), list.end(), a) != list.end();
        ASSERT_EQ(is_fan, listed);
        ASSERT_EQ(is_fan, p.stream(a, u) > 0);
      }
    }
    if (p.user_count() > 1) {
      const auto& gone = p.users()[k % p.user_count()];
      const auto q = p.without_user(gone);
      for (const auto& u : q.users()) ASSERT_EQ(q.profile(u), p.profile(u));
      ASSERT_FALSE(q.has_user(gone));
    }
  }
}

}  // namespace
}  // namespace streamshare
