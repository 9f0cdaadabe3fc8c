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

#ifndef STREAMSHARE_CSV_HPP_
#define STREAMSHARE_CSV_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "streamshare/problem.hpp"

namespace streamshare {

// Stream matrix format:
//
//   artist_id,<user id>,<user id>,...
//   <artist id>,<count>,<count>,...
//
// Comma separated, UTF-8, no quoting. Blank lines and a trailing '\r' are
// ignored. Malformed structure throws kParse, ragged rows kDimensionMismatch,
// and counts that are not nonnegative integers kNegativeOrNonIntegerStream.
StreamingProblem parse_csv(std::istream& in);
StreamingProblem parse_csv(std::string_view text);
// Throws kIo when the file cannot be opened.
StreamingProblem read_csv_file(const std::filesystem::path& path);

std::string to_csv(const StreamingProblem& p);

}  // namespace streamshare

#endif  // STREAMSHARE_CSV_HPP_
