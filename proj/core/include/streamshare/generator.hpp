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

#ifndef STREAMSHARE_GENERATOR_HPP_
#define STREAMSHARE_GENERATOR_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "streamshare/games.hpp"
#include "streamshare/indices.hpp"
#include "streamshare/problem.hpp"

namespace streamshare {

// Seeded source of random streaming problems. Identical settings and seed
// always produce the identical problem, independent of platform.
struct ProblemGenerator {
  std::uint64_t seed = 1;
  std::size_t min_artists = 2;
  std::size_t max_artists = 4;
  std::size_t min_users = 2;
  std::size_t max_users = 5;
  StreamCount max_stream = 4;
  // Probability that an entry is zero before repairs.
  double sparsity = 0.4;
  bool every_user_streams_two = false;
  bool ensure_similar_user_pair = false;
  bool ensure_proportional_artist_pair = false;
};

// Throws kUnsatisfiableConstraints when the ranges are empty or the flags
// cannot be met.
StreamingProblem generate_problem(const ProblemGenerator& gen);

// The k-th problem of the stream seeded by gen.seed; each k has its own
// derived seed, so problems can be produced in any order.
StreamingProblem generate_problem(const ProblemGenerator& gen, std::uint64_t k);

// Single-user profiles over 1..max_artists artists with entries in
// [0, max_stream], at least one positive. Artist ids are "1".."n".
std::vector<OwnedProfile> generate_profiles(std::size_t count, std::uint64_t seed,
                                            std::size_t max_artists = 8,
                                            StreamCount max_stream = 5);

// Games on 1..max_players players with integer values in [lo, hi] and
// v(empty) = 0. Player ids are "p1".."pn".
std::vector<TUGame> generate_games(std::size_t count, std::uint64_t seed,
                                   std::size_t max_players = 6, long long lo = -5,
                                   long long hi = 10);

}  // namespace streamshare

#endif  // STREAMSHARE_GENERATOR_HPP_
