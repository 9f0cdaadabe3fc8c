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

#include "streamshare/games.hpp"

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

std::vector<std::string> players(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("p" + std::to_string(i + 1));
  return out;
}

V by_permutations(const TUGame& g) {
  // Oracle works on int64 fractions; generated games have integer values.
  const auto sh = oracle::shapley_by_permutations(g.player_count(), [&](unsigned s) {
    const Rational& v = g.value(s);
    return oracle::Frac(static_cast<long long>(numerator(v)),
                        static_cast<long long>(denominator(v)));
  });
  return oracle::to_rationals(sh);
}

TEST(Games, ConstructionChecks) {
  EXPECT_THROW(TUGame(players(2), V{0, 1, 1}), Error);
  EXPECT_THROW(TUGame(players(1), V{1, 1}), Error);
  try {
    (void)TUGame(players(21), V{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kTooManyPlayers);
  }
}

TEST(Games, ShapleyExamples) {
  EXPECT_EQ(shapley_value(TUGame(players(2), V{0, 0, 0, 1})), (V{q(1, 2), q(1, 2)}));
  EXPECT_EQ(shapley_value(TUGame(players(2), V{0, 10, 20, 30})), (V{10, 20}));
  EXPECT_EQ(shapley_value(TUGame(players(2), V{0, 1, 1, 1})), (V{q(1, 2), q(1, 2)}));
  EXPECT_EQ(shapley_value(TUGame(players(1), V{0, 7})), (V{7}));
  // Glove game: one left glove (p1), two right gloves.
  const auto glove = TUGame::from_function(players(3), [](Coalition s) {
    return Rational((s & 1u) && (s & 6u) ? 1 : 0);
  });
  EXPECT_EQ(shapley_value(glove), (V{q(2, 3), q(1, 6), q(1, 6)}));
}

TEST(Games, RestrictionRenumbersPlayers) {
  const TUGame g(players(3), V{0, 1, 2, 3, 4, 5, 6, 7});
  const TUGame r = g.restrict_to(0b101);
  EXPECT_EQ(r.players(), (std::vector<std::string>{"p1", "p3"}));
  EXPECT_EQ(r.values(), (V{0, 1, 4, 5}));
}

TEST(Games, BalancedContributionsCatchesEgalitarianSplit) {
  const TUGame g(players(2), V{0, 1, 0, 1});
  const ValueOperator egalitarian = [](const TUGame& game) {
    const Rational share =
        game.value(game.grand_coalition()) / static_cast<long long>(game.player_count());
    return V(game.player_count(), share);
  };
  const auto result = balanced_contributions_check(g, egalitarian);
  ASSERT_FALSE(result.holds);
  ASSERT_TRUE(result.witness);
  const auto& w = *result.witness;
  EXPECT_EQ(w.value_i, q(1, 2));
  EXPECT_EQ(w.value_j, q(1, 2));
  EXPECT_EQ(w.value_i_without_j - w.value_j_without_i, w.i == 0 ? 1 : -1);
  EXPECT_TRUE(balanced_contributions_check(g).holds);
  EXPECT_TRUE(balanced_contributions_check(TUGame(players(1), V{0, 3}), egalitarian).holds);
}

// The subset formula against the permutation average, plus the classical
// properties, on random games with up to six players.
TEST(GamesProperty, SubsetFormulaMatchesPermutationAverage) {
  for (const auto& g : generate_games(150, 3)) ASSERT_EQ(shapley_value(g), by_permutations(g));
}

TEST(GamesProperty, Efficiency) {
  for (const auto& g : generate_games(150, 4)) {
    Rational sum = 0;
    for (const auto& v : shapley_value(g)) sum += v;
    ASSERT_EQ(sum, g.value(g.grand_coalition()));
  }
}

TEST(GamesProperty, SymmetricPlayersShareEqually) {
  for (const auto& base : generate_games(150, 5)) {
    if (base.player_count() < 2) continue;
    const auto swap01 = [](Coalition s) {
      const Coalition low = s & 3u;
      return (s & ~3u) | (low == 1u ? 2u : low == 2u ? 1u : low);
    };
    const auto g = TUGame::from_function(base.players(), [&](Coalition s) {
      return base.value(s) + base.value(swap01(s));
    });
    const auto sh = shapley_value(g);
    ASSERT_EQ(sh[0], sh[1]);
  }
}

TEST(GamesProperty, NullPlayerGetsZero) {
  for (const auto& base : generate_games(150, 6)) {
    const std::size_t k = base.player_count() - 1;
    const Coalition bit = Coalition{1} << k;
    const auto g = TUGame::from_function(base.players(),
                                         [&](Coalition s) { return base.value(s & ~bit); });
    ASSERT_EQ(shapley_value(g)[k], 0);
  }
}

TEST(GamesProperty, AdditiveInGames) {
  for (const auto& g : generate_games(150, 8)) {
    const auto h = TUGame::from_function(g.players(), [&](Coalition s) {
      return g.value(s) * g.value(s) - coalition_size(s);
    });
    const auto sum = shapley_value(g + h);
    const auto a = shapley_value(g);
    const auto b = shapley_value(h);
    for (std::size_t i = 0; i < sum.size(); ++i) ASSERT_EQ(sum[i], a[i] + b[i]);
  }
}

TEST(GamesProperty, BalancedContributionsHolds) {
  for (const auto& g : generate_games(150, 9)) ASSERT_TRUE(balanced_contributions_check(g).holds);
}

}  // namespace
}  // namespace streamshare
