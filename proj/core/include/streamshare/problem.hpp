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

#ifndef STREAMSHARE_PROBLEM_HPP_
#define STREAMSHARE_PROBLEM_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace streamshare {

using StreamCount = std::int64_t;

// A streaming problem: artists (rows), users (columns) and the matrix of
// stream counts between them. Immutable once built; every accessor is const
// and safe to share across threads.
//
// Invariants: ids are unique within artists and within users, every count is
// nonnegative, and every user has a positive total.
class StreamingProblem {
 public:
  // `streams` has one row per artist and one column per user.
  // Throws Error with kDimensionMismatch, kNegativeOrNonIntegerStream,
  // kDuplicateId or kEmptyUserColumn.
  static StreamingProblem build(std::vector<std::string> artists,
                                std::vector<std::string> users,
                                const std::vector<std::vector<StreamCount>>& streams);

  const std::vector<std::string>& artists() const { return artists_; }
  const std::vector<std::string>& users() const { return users_; }
  std::size_t artist_count() const { return artists_.size(); }
  std::size_t user_count() const { return users_.size(); }

  // Positional access, artist row `a`, user column `u`.
  StreamCount stream(std::size_t a, std::size_t u) const {
    return cells_[a * users_.size() + u];
  }
  StreamCount artist_total_at(std::size_t a) const { return artist_totals_[a]; }
  StreamCount user_total_at(std::size_t u) const { return user_totals_[u]; }
  std::vector<StreamCount> profile_at(std::size_t u) const;
  std::vector<StreamCount> row_at(std::size_t a) const;

  // Throw kUnknownArtist / kUnknownUser.
  std::size_t artist_position(std::string_view artist) const;
  std::size_t user_position(std::string_view user) const;
  bool has_artist(std::string_view artist) const;
  bool has_user(std::string_view user) const;

  StreamCount stream(std::string_view artist, std::string_view user) const;
  // T_i: all streams of an artist.
  StreamCount artist_total(std::string_view artist) const;
  // T^j: all streams of a user; always positive.
  StreamCount user_total(std::string_view user) const;
  StreamCount grand_total() const { return grand_total_; }

  // Users with at least one stream of `artist`, in user order.
  std::vector<std::string> fans(std::string_view artist) const;
  // Artists streamed at least once by `user`, in artist order. Never empty.
  std::vector<std::string> artist_list(std::string_view user) const;
  // Column of `user`, indexed by artist position.
  std::vector<StreamCount> profile(std::string_view user) const;

  // Drops one user column. Throws kWouldEmptyProblem for the last user.
  StreamingProblem without_user(std::string_view user) const;
  // Drops one artist row. Throws kWouldEmptyProblem for the last artist and
  // kEmptyUserColumn when some user streamed only that artist.
  StreamingProblem without_artist(std::string_view artist) const;
  // Sub-problem on a subset of users, kept in this problem's user order.
  StreamingProblem with_users(std::span<const std::string> users) const;

  friend bool operator==(const StreamingProblem& a, const StreamingProblem& b) {
    return a.artists_ == b.artists_ && a.users_ == b.users_ && a.cells_ == b.cells_;
  }

 private:
  StreamingProblem(std::vector<std::string> artists, std::vector<std::string> users,
                   std::vector<StreamCount> cells);

  std::vector<std::string> artists_;
  std::vector<std::string> users_;
  std::vector<StreamCount> cells_;  // row-major, artists x users
  std::vector<StreamCount> artist_totals_;
  std::vector<StreamCount> user_totals_;
  StreamCount grand_total_ = 0;
  std::unordered_map<std::string, std::size_t> artist_pos_;
  std::unordered_map<std::string, std::size_t> user_pos_;
};

}  // namespace streamshare

#endif  // STREAMSHARE_PROBLEM_HPP_
