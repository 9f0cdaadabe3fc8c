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

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>

#include "streamshare/error.hpp"

namespace streamshare {
namespace {

void require_unique(const std::vector<std::string>& ids, const char* what) {
  std::unordered_set<std::string_view> seen;
  for (const auto& id : ids) {
    if (!seen.insert(id).second) {
      throw Error(Errc::kDuplicateId, std::string("duplicate ") + what + " id '" + id + "'");
    }
  }
}

}  // namespace

StreamingProblem::StreamingProblem(std::vector<std::string> artists,
                                   std::vector<std::string> users,
                                   std::vector<StreamCount> cells)
    : artists_(std::move(artists)),
      users_(std::move(users)),
      cells_(std::move(cells)),
      artist_totals_(artists_.size(), 0),
      user_totals_(users_.size(), 0) {
  const std::size_t m = users_.size();
  for (std::size_t a = 0; a < artists_.size(); ++a) {
    for (std::size_t u = 0; u < m; ++u) {
      const StreamCount c = cells_[a * m + u];
      artist_totals_[a] += c;
      user_totals_[u] += c;
      grand_total_ += c;
    }
  }
  for (std::size_t a = 0; a < artists_.size(); ++a) artist_pos_.emplace(artists_[a], a);
  for (std::size_t u = 0; u < m; ++u) user_pos_.emplace(users_[u], u);
  for (std::size_t u = 0; u < m; ++u) {
    if (user_totals_[u] <= 0) {
      throw Error(Errc::kEmptyUserColumn, "user '" + users_[u] + "' has no streams");
    }
  }
}

StreamingProblem StreamingProblem::build(std::vector<std::string> artists,
                                         std::vector<std::string> users,
                                         const std::vector<std::vector<StreamCount>>& streams) {
  if (artists.empty() || users.empty()) {
    throw Error(Errc::kDimensionMismatch, "a problem needs at least one artist and one user");
  }
  if (streams.size() != artists.size()) {
    throw Error(Errc::kDimensionMismatch,
                "expected " + std::to_string(artists.size()) + " rows, got " +
                    std::to_string(streams.size()));
  }
  require_unique(artists, "artist");
  require_unique(users, "user");

  std::vector<StreamCount> cells;
  cells.reserve(artists.size() * users.size());
  for (std::size_t a = 0; a < streams.size(); ++a) {
    if (streams[a].size() != users.size()) {
      throw Error(Errc::kDimensionMismatch,
                  "row of artist '" + artists[a] + "' has " + std::to_string(streams[a].size()) +
                      " entries, expected " + std::to_string(users.size()));
    }
    for (std::size_t u = 0; u < users.size(); ++u) {
      if (streams[a][u] < 0) {
        throw Error(Errc::kNegativeOrNonIntegerStream,
                    "negative streams for artist '" + artists[a] + "', user '" + users[u] + "'");
      }
      cells.push_back(streams[a][u]);
    }
  }
  return StreamingProblem(std::move(artists), std::move(users), std::move(cells));
}

std::vector<StreamCount> StreamingProblem::profile_at(std::size_t u) const {
  std::vector<StreamCount> out(artists_.size());
  for (std::size_t a = 0; a < artists_.size(); ++a) out[a] = stream(a, u);
  return out;
}

std::vector<StreamCount> StreamingProblem::row_at(std::size_t a) const {
  const auto first = cells_.begin() + static_cast<std::ptrdiff_t>(a * users_.size());
  return {first, first + static_cast<std::ptrdiff_t>(users_.size())};
}

std::size_t StreamingProblem::artist_position(std::string_view artist) const {
  auto it = artist_pos_.find(std::string(artist));
  if (it == artist_pos_.end()) {
    throw Error(Errc::kUnknownArtist, "unknown artist '" + std::string(artist) + "'");
  }
  return it->second;
}

std::size_t StreamingProblem::user_position(std::string_view user) const {
  auto it = user_pos_.find(std::string(user));
  if (it == user_pos_.end()) {
    throw Error(Errc::kUnknownUser, "unknown user '" + std::string(user) + "'");
  }
  return it->second;
}

bool StreamingProblem::has_artist(std::string_view artist) const {
  return artist_pos_.contains(std::string(artist));
}

bool StreamingProblem::has_user(std::string_view user) const {
  return user_pos_.contains(std::string(user));
}

StreamCount StreamingProblem::stream(std::string_view artist, std::string_view user) const {
  return stream(artist_position(artist), user_position(user));
}

StreamCount StreamingProblem::artist_total(std::string_view artist) const {
  return artist_totals_[artist_position(artist)];
}

StreamCount StreamingProblem::user_total(std::string_view user) const {
  return user_totals_[user_position(user)];
}

std::vector<std::string> StreamingProblem::fans(std::string_view artist) const {
  const std::size_t a = artist_position(artist);
  std::vector<std::string> out;
  for (std::size_t u = 0; u < users_.size(); ++u) {
    if (stream(a, u) > 0) out.push_back(users_[u]);
  }
  return out;
}

std::vector<std::string> StreamingProblem::artist_list(std::string_view user) const {
  const std::size_t u = user_position(user);
  std::vector<std::string> out;
  for (std::size_t a = 0; a < artists_.size(); ++a) {
    if (stream(a, u) > 0) out.push_back(artists_[a]);
  }
  return out;
}

std::vector<StreamCount> StreamingProblem::profile(std::string_view user) const {
  return profile_at(user_position(user));
}

StreamingProblem StreamingProblem::without_user(std::string_view user) const {
  const std::size_t drop = user_position(user);
  if (users_.size() == 1) {
    throw Error(Errc::kWouldEmptyProblem, "cannot remove the only user '" + std::string(user) + "'");
  }
  std::vector<std::string> users;
  users.reserve(users_.size() - 1);
  for (std::size_t u = 0; u < users_.size(); ++u) {
    if (u != drop) users.push_back(users_[u]);
  }
  std::vector<StreamCount> cells;
  cells.reserve(artists_.size() * users.size());
  for (std::size_t a = 0; a < artists_.size(); ++a) {
    for (std::size_t u = 0; u < users_.size(); ++u) {
      if (u != drop) cells.push_back(stream(a, u));
    }
  }
  return StreamingProblem(artists_, std::move(users), std::move(cells));
}

StreamingProblem StreamingProblem::without_artist(std::string_view artist) const {
  const std::size_t drop = artist_position(artist);
  if (artists_.size() == 1) {
    throw Error(Errc::kWouldEmptyProblem,
                "cannot remove the only artist '" + std::string(artist) + "'");
  }
  std::vector<std::string> artists;
  artists.reserve(artists_.size() - 1);
  std::vector<StreamCount> cells;
  cells.reserve((artists_.size() - 1) * users_.size());
  for (std::size_t a = 0; a < artists_.size(); ++a) {
    if (a == drop) continue;
    artists.push_back(artists_[a]);
    for (std::size_t u = 0; u < users_.size(); ++u) cells.push_back(stream(a, u));
  }
  return StreamingProblem(std::move(artists), users_, std::move(cells));
}

StreamingProblem StreamingProblem::with_users(std::span<const std::string> users) const {
  std::vector<std::size_t> keep;
  keep.reserve(users.size());
  for (const auto& id : users) keep.push_back(user_position(id));
  if (keep.empty()) {
    throw Error(Errc::kWouldEmptyProblem, "a sub-problem needs at least one user");
  }
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
    throw Error(Errc::kDuplicateId, "user listed twice in sub-problem");
  }
  std::vector<std::string> ids;
  ids.reserve(keep.size());
  for (auto u : keep) ids.push_back(users_[u]);
  std::vector<StreamCount> cells;
  cells.reserve(artists_.size() * keep.size());
  for (std::size_t a = 0; a < artists_.size(); ++a) {
    for (auto u : keep) cells.push_back(stream(a, u));
  }
  return StreamingProblem(artists_, std::move(ids), std::move(cells));
}

}  // namespace streamshare
