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

#include <string>
#include <utility>

#include "streamshare/error.hpp"

namespace streamshare {
namespace {

void require_player_count(std::size_t n) {
  if (n > kMaxPlayers) {
    throw Error(Errc::kTooManyPlayers, std::to_string(n) + " players exceed the limit of " +
                                           std::to_string(kMaxPlayers));
  }
}

std::size_t other_position(std::size_t player, std::size_t removed) {
  return player > removed ? player - 1 : player;
}

}  // namespace

TUGame::TUGame(std::vector<std::string> players, std::vector<Rational> values)
    : players_(std::move(players)), values_(std::move(values)) {
  require_player_count(players_.size());
  if (values_.size() != (std::size_t{1} << players_.size())) {
    throw Error(Errc::kInvalidParameter, "a game on " + std::to_string(players_.size()) +
                                             " players needs " +
                                             std::to_string(std::size_t{1} << players_.size()) +
                                             " coalition values");
  }
  if (values_[0] != 0) throw Error(Errc::kInvalidParameter, "v(empty) must be 0");
}

TUGame TUGame::from_function(std::vector<std::string> players,
                             const std::function<Rational(Coalition)>& v) {
  require_player_count(players.size());
  const std::size_t count = std::size_t{1} << players.size();
  std::vector<Rational> values(count);
  for (std::size_t s = 1; s < count; ++s) values[s] = v(static_cast<Coalition>(s));
  return TUGame(std::move(players), std::move(values));
}

TUGame TUGame::restrict_to(Coalition members) const {
  std::vector<std::string> players;
  std::vector<Coalition> bits;
  for (std::size_t k = 0; k < players_.size(); ++k) {
    if (members & (Coalition{1} << k)) {
      players.push_back(players_[k]);
      bits.push_back(Coalition{1} << k);
    }
  }
  const std::size_t count = std::size_t{1} << players.size();
  std::vector<Rational> values(count);
  for (std::size_t t = 1; t < count; ++t) {
    Coalition original = 0;
    for (std::size_t k = 0; k < bits.size(); ++k) {
      if (t & (std::size_t{1} << k)) original |= bits[k];
    }
    values[t] = values_[original];
  }
  return TUGame(std::move(players), std::move(values));
}

TUGame TUGame::operator+(const TUGame& other) const {
  if (players_ != other.players_) {
    throw Error(Errc::kInvalidParameter, "games on different player sets cannot be added");
  }
  std::vector<Rational> values(values_.size());
  for (std::size_t s = 0; s < values_.size(); ++s) values[s] = values_[s] + other.values_[s];
  return TUGame(players_, std::move(values));
}

std::vector<Rational> shapley_value(const TUGame& game) {
  const std::size_t n = game.player_count();
  if (n == 0) return {};

  // marginal[i][s]: sum of v(S+i) - v(S) over coalitions S of size s without i
  std::vector<std::vector<Rational>> marginal(n, std::vector<Rational>(n, Rational(0)));
  const std::size_t count = std::size_t{1} << n;
  for (std::size_t s = 0; s < count; ++s) {
    const auto coalition = static_cast<Coalition>(s);
    const auto size = static_cast<std::size_t>(coalition_size(coalition));
    const Rational& base = game.value(coalition);
    for (std::size_t i = 0; i < n; ++i) {
      const Coalition bit = Coalition{1} << i;
      if (coalition & bit) continue;
      marginal[i][size] += game.value(coalition | bit) - base;
    }
  }

  // |S|! (n-|S|-1)! / n!, built incrementally from weight(0) = 1/n.
  std::vector<Rational> weight(n);
  weight[0] = Rational(1, static_cast<long long>(n));
  for (std::size_t s = 1; s < n; ++s) {
    weight[s] = weight[s - 1] * Rational(static_cast<long long>(s),
                                         static_cast<long long>(n - s));
  }

  std::vector<Rational> out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s = 0; s < n; ++s) out[i] += weight[s] * marginal[i][s];
  }
  return out;
}

BalancedContributionsResult balanced_contributions_check(const TUGame& game,
                                                         const ValueOperator& value) {
  const std::size_t n = game.player_count();
  BalancedContributionsResult result;
  if (n < 2) return result;

  const std::vector<Rational> full = value(game);
  std::vector<std::vector<Rational>> without(n);
  for (std::size_t k = 0; k < n; ++k) {
    without[k] = value(game.restrict_to(game.grand_coalition() & ~(Coalition{1} << k)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational& i_without_j = without[j][other_position(i, j)];
      const Rational& j_without_i = without[i][other_position(j, i)];
      if (full[i] - i_without_j != full[j] - j_without_i) {
        result.holds = false;
        result.witness = BalancedContributionsViolation{
            .i = i,
            .j = j,
            .value_i = full[i],
            .value_i_without_j = i_without_j,
            .value_j = full[j],
            .value_j_without_i = j_without_i,
        };
        return result;
      }
    }
  }
  return result;
}

}  // namespace streamshare
