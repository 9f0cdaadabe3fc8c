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

#include "streamshare/generator.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "streamshare/error.hpp"

namespace streamshare {
namespace {

constexpr int kMaxAttempts = 1000;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Draws from mt19937_64 with explicit rejection sampling; the standard
// distributions are implementation-defined and would break cross-platform
// determinism.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) return engine_();
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return lo + r % span;
  }

  std::size_t index(std::size_t size) { return static_cast<std::size_t>(uniform(0, size - 1)); }

  bool chance(double p) {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
  }

 private:
  std::mt19937_64 engine_;
};

using Matrix = std::vector<std::vector<StreamCount>>;

std::size_t positives_in_column(const Matrix& t, std::size_t u) {
  std::size_t k = 0;
  for (const auto& row : t) k += row[u] > 0 ? 1 : 0;
  return k;
}

bool has_similar_pair(const Matrix& t) {
  for (const auto& row : t) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      for (std::size_t k = j + 1; k < row.size(); ++k) {
        if (row[j] > 0 && row[j] == row[k]) return true;
      }
    }
  }
  return false;
}

void check_settings(const ProblemGenerator& gen) {
  auto fail = [](const std::string& why) { throw Error(Errc::kUnsatisfiableConstraints, why); };
  if (gen.min_artists < 1 || gen.min_artists > gen.max_artists) fail("empty artist range");
  if (gen.min_users < 1 || gen.min_users > gen.max_users) fail("empty user range");
  if (gen.max_stream < 1) fail("max_stream must be at least 1");
  if (!(gen.sparsity >= 0.0 && gen.sparsity < 1.0)) {
    fail("sparsity must lie in [0, 1) for every user to have streams");
  }
  if ((gen.every_user_streams_two || gen.ensure_proportional_artist_pair) && gen.max_artists < 2) {
    fail("constraint flags need at least two artists");
  }
  if (gen.ensure_similar_user_pair && gen.max_users < 2) {
    fail("a similar user pair needs at least two users");
  }
}

}  // namespace

StreamingProblem generate_problem(const ProblemGenerator& gen, std::uint64_t k) {
  check_settings(gen);
  Draw draw(splitmix64(gen.seed) ^ splitmix64(k + 0x632be59bd9b4e019ULL));

  const bool need_two_artists = gen.every_user_streams_two || gen.ensure_proportional_artist_pair;
  const std::size_t n_lo = std::max(gen.min_artists, need_two_artists ? std::size_t{2} : 1);
  const std::size_t m_lo = std::max(gen.min_users, gen.ensure_similar_user_pair ? std::size_t{2} : 1);
  const std::size_t per_user = gen.every_user_streams_two ? 2 : 1;
  const auto positive = [&] { return static_cast<StreamCount>(draw.uniform(1, gen.max_stream)); };

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const auto n = static_cast<std::size_t>(draw.uniform(n_lo, gen.max_artists));
    const auto m = static_cast<std::size_t>(draw.uniform(m_lo, gen.max_users));
    Matrix t(n, std::vector<StreamCount>(m, 0));
    for (auto& row : t) {
      for (auto& cell : row) cell = draw.chance(gen.sparsity) ? 0 : positive();
    }

    std::size_t target = n;  // row rebuilt as lambda * source
    std::size_t source = n;
    StreamCount lambda = 0;
    if (gen.ensure_proportional_artist_pair) {
      source = draw.index(n);
      target = (source + 1 + draw.index(n - 1)) % n;
      lambda = static_cast<StreamCount>(draw.uniform(0, 3));
    }
    if (gen.ensure_similar_user_pair) {
      std::size_t artist = draw.index(n);
      if (artist == target) artist = source;
      const std::size_t j = draw.index(m);
      const std::size_t j2 = (j + 1 + draw.index(m - 1)) % m;
      if (t[artist][j] == 0) t[artist][j] = positive();
      t[artist][j2] = t[artist][j];
    }
    for (std::size_t u = 0; u < m; ++u) {
      for (int guard = 0; positives_in_column(t, u) < std::min(per_user, n) && guard < 64; ++guard) {
        const std::size_t a = draw.index(n);
        if (a != target && t[a][u] == 0) t[a][u] = positive();
      }
    }
    if (target < n) {
      for (std::size_t u = 0; u < m; ++u) t[target][u] = lambda * t[source][u];
    }

    bool ok = true;
    for (std::size_t u = 0; u < m && ok; ++u) ok = positives_in_column(t, u) >= per_user;
    if (ok && gen.ensure_similar_user_pair) ok = has_similar_pair(t);
    if (!ok) continue;

    std::vector<std::string> artists(n), users(m);
    for (std::size_t a = 0; a < n; ++a) artists[a] = std::to_string(a + 1);
    for (std::size_t u = 0; u < m; ++u) users[u] = "u" + std::to_string(u + 1);
    return StreamingProblem::build(std::move(artists), std::move(users), t);
  }
  throw Error(Errc::kUnsatisfiableConstraints,
              "no problem satisfying the constraints after " + std::to_string(kMaxAttempts) +
                  " attempts");
}

StreamingProblem generate_problem(const ProblemGenerator& gen) {
  return generate_problem(gen, 0);
}

std::vector<OwnedProfile> generate_profiles(std::size_t count, std::uint64_t seed,
                                            std::size_t max_artists, StreamCount max_stream) {
  ProblemGenerator gen;
  gen.seed = seed;
  gen.min_artists = 1;
  gen.max_artists = max_artists;
  gen.min_users = 1;
  gen.max_users = 1;
  gen.max_stream = max_stream;
  gen.sparsity = 0.3;
  std::vector<OwnedProfile> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(OwnedProfile::from_column(generate_problem(gen, k), 0));
  }
  return out;
}

std::vector<TUGame> generate_games(std::size_t count, std::uint64_t seed,
                                   std::size_t max_players, long long lo, long long hi) {
  if (max_players < 1 || max_players > kMaxPlayers || lo > hi) {
    throw Error(Errc::kInvalidParameter, "bad game generator settings");
  }
  Draw draw(splitmix64(seed ^ 0x5851f42d4c957f2dULL));
  const auto span = static_cast<std::uint64_t>(hi - lo);
  std::vector<TUGame> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const auto n = static_cast<std::size_t>(draw.uniform(1, max_players));
    std::vector<std::string> players(n);
    for (std::size_t i = 0; i < n; ++i) players[i] = "p" + std::to_string(i + 1);
    std::vector<Rational> values(std::size_t{1} << n);
    for (std::size_t s = 1; s < values.size(); ++s) {
      values[s] = lo + static_cast<long long>(draw.uniform(0, span));
    }
    out.emplace_back(std::move(players), std::move(values));
  }
  return out;
}

}  // namespace streamshare
