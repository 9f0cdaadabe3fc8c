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

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "streamshare/error.hpp"

namespace streamshare {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.emplace_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

StreamCount parse_count(const std::string& text, const std::string& artist,
                        const std::string& user) {
  StreamCount value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last || value < 0) {
    throw Error(Errc::kNegativeOrNonIntegerStream,
                "streams for artist '" + artist + "', user '" + user +
                    "' must be a nonnegative integer, got '" + text + "'");
  }
  return value;
}

}  // namespace

StreamingProblem parse_csv(std::istream& in) {
  std::string line;
  std::vector<std::string> header;
  std::size_t line_no = 0;
  while (header.empty() && std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    header = split_fields(line);
  }
  if (header.size() < 2) {
    throw Error(Errc::kParse, "header must be 'artist_id,<user ids...>' with at least one user");
  }
  std::vector<std::string> users(header.begin() + 1, header.end());
  for (const auto& u : users) {
    if (u.empty()) throw Error(Errc::kParse, "empty user id in header");
  }

  std::vector<std::string> artists;
  std::vector<std::vector<StreamCount>> streams;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto fields = split_fields(line);
    if (fields.front().empty()) {
      throw Error(Errc::kParse, "empty artist id on line " + std::to_string(line_no));
    }
    if (fields.size() != header.size()) {
      throw Error(Errc::kDimensionMismatch,
                  "line " + std::to_string(line_no) + " has " + std::to_string(fields.size()) +
                      " fields, header has " + std::to_string(header.size()));
    }
    std::vector<StreamCount> row;
    row.reserve(users.size());
    for (std::size_t k = 1; k < fields.size(); ++k) {
      row.push_back(parse_count(fields[k], fields.front(), users[k - 1]));
    }
    artists.push_back(std::move(fields.front()));
    streams.push_back(std::move(row));
  }
  if (artists.empty()) throw Error(Errc::kParse, "no artist rows");
  return StreamingProblem::build(std::move(artists), std::move(users), streams);
}

StreamingProblem parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_csv(in);
}

StreamingProblem read_csv_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kIo, "cannot open '" + path.string() + "'");
  return parse_csv(in);
}

std::string to_csv(const StreamingProblem& p) {
  std::string out = "artist_id";
  for (const auto& u : p.users()) out += "," + u;
  out += "\n";
  for (std::size_t a = 0; a < p.artist_count(); ++a) {
    out += p.artists()[a];
    for (std::size_t u = 0; u < p.user_count(); ++u) out += "," + std::to_string(p.stream(a, u));
    out += "\n";
  }
  return out;
}

}  // namespace streamshare
