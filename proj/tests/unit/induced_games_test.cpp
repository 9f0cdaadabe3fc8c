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

#include "streamshare/induced_games.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "streamshare/error.hpp"
#include "streamshare/generator.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace streamshare {
namespace {

using fixtures::q;
using V = std::vector<Rational>;

OwnedProfile profile(const V& x) {
  OwnedProfile p;
  p.user = "j";
  for (std::size_t i = 0; i < x.size(); ++i) p.artists.push_back(std::to_string(i + 1));
  p.streams = x;
  return p;
}

TEST(InducedGames, ProRataGameIsAdditive) {
  const auto x = profile({10, 20});
  const TUGame g = induced_games::pro_rata()(x.view());
  EXPECT_EQ(g.values(), (V{0, 10, 20, 30}));
}

TEST(InducedGames, ShapleyGameIsOneOnStreamedCoalitions) {
  const auto x = profile({10, 20});
  EXPECT_EQ(induced_games::shapley()(x.view()).values(), (V{0, 1, 1, 1}));
  const auto y = profile({0, 3, 0});
  const TUGame g = induced_games::shapley()(y.view());
  EXPECT_EQ(g.value(0b001), 0);
  EXPECT_EQ(g.value(0b010), 1);
  EXPECT_EQ(g.value(0b101), 0);
}

// Sh of the unanimity-style game is 1/|L| on streamed artists, by
// brute force over orders.
TEST(InducedGames, ShapleyGameMatchesOneOverListSize) {
  for (const auto& x : generate_profiles(120, 31, 6)) {
    const TUGame g = induced_games::shapley()(x.view());
    const auto sh = oracle::shapley_by_permutations(g.player_count(), [&](unsigned s) {
      return oracle::Frac(g.value(s) == 0 ? 0 : 1);
    });
    const auto d = decompositions::shapley();
    for (std::size_t i = 0; i < x.artists.size(); ++i) {
      ASSERT_EQ(sh[i].to_rational(), d(i, x.view()));
    }
  }
}

TEST(InducedGames, UnstreamedArtistsAreNullPlayers) {
  for (const auto& family : {induced_games::pro_rata(), induced_games::shapley(),
                             induced_games::weighted(weights::constant(3)),
                             induced_games::probabilistic(probabilities::proportional())}) {
    for (const auto& x : generate_profiles(60, 32, 6)) {
      const TUGame g = family(x.view());
      for (std::size_t i = 0; i < x.streams.size(); ++i) {
        if (x.streams[i] != 0) continue;
        const Coalition bit = Coalition{1} << i;
        for (Coalition s = 0; s <= g.grand_coalition(); ++s) {
          ASSERT_EQ(g.value(s | bit), g.value(s & ~bit));
        }
      }
    }
  }
}

TEST(InducedGames, ProRataAndShapleyPairsPass) {
  const auto sample = generate_profiles(200, 33);
  const auto pr = verify_shapley_induced(decompositions::pro_rata(), induced_games::pro_rata(),
                                         sample);
  EXPECT_TRUE(pr.ok());
  EXPECT_EQ(pr.profiles_checked, 200u);
  EXPECT_GT(pr.coalitions_checked, 200u);
  const auto sh = verify_shapley_induced(decompositions::shapley(), induced_games::shapley(),
                                         sample);
  EXPECT_TRUE(sh.ok());
}

TEST(InducedGames, ConstantWeightsAreShapleyInduced) {
  const auto sample = generate_profiles(80, 34);
  const DecompositionFunction twice = [](std::size_t i, const UserProfile& x) {
    return 2 * x.streams[i];
  };
  EXPECT_TRUE(
      verify_shapley_induced(twice, induced_games::weighted(weights::constant(2)), sample).ok());
}

TEST(InducedGames, UserCentricAgainstProRataGame) {
  const std::vector<OwnedProfile> sample = {profile({1, 2})};
  const auto report = verify_shapley_induced(decompositions::user_centric(),
                                             induced_games::pro_rata(), sample);
  ASSERT_EQ(report.violations.size(), 2u);
  EXPECT_EQ(report.violations[0].kind, ShapleyInducedViolation::Kind::kValue);
  EXPECT_EQ(report.violations[0].expected, q(1, 3));
  EXPECT_EQ(report.violations[0].actual, 1);
  EXPECT_EQ(report.violations[1].expected, q(2, 3));
  EXPECT_EQ(report.violations[1].actual, 2);
}

// Weighting by 1/sum(x) reproduces the user-centric values but the games of
// restricted profiles rescale, so restriction consistency breaks.
TEST(InducedGames, InverseTotalWeightsBreakRestriction) {
  const std::vector<OwnedProfile> sample = {profile({1, 2})};
  const auto report = verify_shapley_induced(
      decompositions::user_centric(), induced_games::weighted(weights::inverse_total()), sample);
  ASSERT_FALSE(report.ok());
  for (const auto& v : report.violations) {
    EXPECT_EQ(v.kind, ShapleyInducedViolation::Kind::kRestriction);
  }
  // v({1}) = 1/3 but the restricted profile (1) has v = 1.
  EXPECT_EQ(report.violations.front().coalition, 0b01u);
  EXPECT_EQ(report.violations.front().expected, 1);
  EXPECT_EQ(report.violations.front().actual, q(1, 3));
}

TEST(InducedGames, RejectsTooManyPositiveEntries) {
  const std::vector<OwnedProfile> sample = {profile(V(13, Rational(1)))};
  EXPECT_THROW((void)verify_shapley_induced(decompositions::shapley(), induced_games::shapley(),
                                            sample),
               Error);
}

}  // namespace
}  // namespace streamshare
