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

#ifndef STREAMSHARE_ARTIST_VALUES_HPP_
#define STREAMSHARE_ARTIST_VALUES_HPP_

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "streamshare/error.hpp"
#include "streamshare/rational.hpp"

namespace streamshare {

// Per-artist rational values keyed by artist id. Keys follow the artist order
// of the problem the vector was computed on.
template <class Tag>
class ArtistValues {
 public:
  ArtistValues() = default;
  ArtistValues(std::vector<std::string> artists, std::vector<Rational> values)
      : artists_(std::move(artists)), values_(std::move(values)) {
    if (artists_.size() != values_.size()) {
      throw Error(Errc::kDimensionMismatch, "artist ids and values differ in length");
    }
  }

  const std::vector<std::string>& artists() const { return artists_; }
  const std::vector<Rational>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  const Rational& operator[](std::size_t pos) const { return values_[pos]; }

  const Rational& at(std::string_view artist) const {
    auto it = std::find(artists_.begin(), artists_.end(), artist);
    if (it == artists_.end()) {
      throw Error(Errc::kUnknownArtist, "unknown artist '" + std::string(artist) + "'");
    }
    return values_[static_cast<std::size_t>(it - artists_.begin())];
  }

  Rational sum() const {
    Rational total = 0;
    for (const auto& v : values_) total += v;
    return total;
  }

  friend bool operator==(const ArtistValues&, const ArtistValues&) = default;

 private:
  std::vector<std::string> artists_;
  std::vector<Rational> values_;
};

struct IndexTag {};
struct RewardTag {};

// Importance of each artist; only its direction matters for rewards.
using IndexVector = ArtistValues<IndexTag>;
// Revenue share of each artist; sums to the number of users.
using RewardVector = ArtistValues<RewardTag>;

}  // namespace streamshare

#endif  // STREAMSHARE_ARTIST_VALUES_HPP_
