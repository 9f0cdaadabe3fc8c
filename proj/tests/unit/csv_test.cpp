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

#include "streamshare/csv.hpp"

#include <gtest/gtest.h>

#include <string>

#include "streamshare/error.hpp"
#include "streamshare/generator.hpp"
#include "support/fixtures.hpp"

namespace streamshare {
namespace {

Errc parse_error(const std::string& text) {
  try {
    (void)parse_csv(std::string_view(text));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed: " << text;
  return Errc::kIo;
}

TEST(Csv, ParsesExampleOne) {
  EXPECT_EQ(parse_csv(std::string_view("artist_id,a,b,c\n1,100,0,10\n2,0,10,20\n")),
            fixtures::example1());
}

TEST(Csv, ToleratesCrlfAndBlankLines) {
  EXPECT_EQ(parse_csv(std::string_view("\nartist_id,a,b,c\r\n1,100,0,10\r\n\r\n2,0,10,20")),
            fixtures::example1());
}

TEST(Csv, ReadsFile) {
  EXPECT_EQ(read_csv_file(std::string(STREAMSHARE_TEST_DATA_DIR) + "/example1.csv"),
            fixtures::example1());
}

TEST(Csv, Errors) {
  EXPECT_EQ(parse_error(""), Errc::kParse);
  EXPECT_EQ(parse_error("artist_id\n1\n"), Errc::kParse);
  EXPECT_EQ(parse_error("artist_id,a\n"), Errc::kParse);
  EXPECT_EQ(parse_error("artist_id,a,b\n1,1\n"), Errc::kDimensionMismatch);
  EXPECT_EQ(parse_error("artist_id,a\n1,1.5\n"), Errc::kNegativeOrNonIntegerStream);
  EXPECT_EQ(parse_error("artist_id,a\n1,-2\n"), Errc::kNegativeOrNonIntegerStream);
  EXPECT_EQ(parse_error("artist_id,a\n1,x\n"), Errc::kNegativeOrNonIntegerStream);
  EXPECT_EQ(parse_error("artist_id,a,b\n1,1,0\n"), Errc::kEmptyUserColumn);
  EXPECT_EQ(parse_error("artist_id,a\n1,1\n1,2\n"), Errc::kDuplicateId);
}

TEST(Csv, MissingFileIsIoError) {
  try {
    (void)read_csv_file("/nonexistent/streams.csv");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kIo);
  }
}

TEST(Csv, WritesHeaderThenRows) {
  EXPECT_EQ(to_csv(fixtures::example1()), "artist_id,a,b,c\n1,100,0,10\n2,0,10,20\n");
}

// Property: serialization re-parses to an identical problem.
TEST(Csv, RoundTripOnGeneratedProblems) {
  ProblemGenerator gen;
  gen.seed = 11;
  gen.max_artists = 6;
  gen.max_users = 7;
  gen.max_stream = 2000;
  for (std::uint64_t k = 0; k < 300; ++k) {
    const auto p = generate_problem(gen, k);
    ASSERT_EQ(parse_csv(std::string_view(to_csv(p))), p) << to_csv(p);
  }
}

}  // namespace
}  // namespace streamshare
