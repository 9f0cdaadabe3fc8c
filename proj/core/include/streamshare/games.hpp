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

#ifndef STREAMSHARE_GAMES_HPP_
#define STREAMSHARE_GAMES_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "streamshare/rational.hpp"

namespace streamshare {

// Bit k set means player k belongs to the coalition.
using Coalition = std::uint32_t;

inline constexpr std::size_t kMaxPlayers = 20;

inline int coalition_size(Coalition s) { return __builtin_popcount(s); }

// Transferable-utility game stored densely: one value per coalition, with
// v(empty) == 0. Immutable.
class TUGame {
 public:
  // `values.size()` must be 2^players.size() and values[0] must be 0.
  // Throws kTooManyPlayers beyond kMaxPlayers, kInvalidParameter otherwise.
  TUGame(std::vector<std::string> players, std::vector<Rational> values);

  static TUGame from_function(std::vector<std::string> players,
                              const std::function<Rational(Coalition)>& v);

  const std::vector<std::string>& players() const { return players_; }
  std::size_t player_count() const { return players_.size(); }
  Coalition grand_coalition() const {
    return static_cast<Coalition>((std::size_t{1} << players_.size()) - 1);
  }
  const Rational& value(Coalition s) const { return values_[s]; }
  const std::vector<Rational>& values() const { return values_; }

  // The game (S, v): players of `members`, renumbered in their original order.
  TUGame restrict_to(Coalition members) const;

  // Same player list required.
  TUGame operator+(const TUGame& other) const;

  friend bool operator==(const TUGame&, const TUGame&) = default;

 private:
  std::vector<std::string> players_;
  std::vector<Rational> values_;
};

// Exact Shapley value by the subset formula
//   Sh_i = sum_{S not containing i} |S|! (n-|S|-1)! / n! * (v(S+i) - v(S)).
std::vector<Rational> shapley_value(const TUGame& game);

using ValueOperator = std::function<std::vector<Rational>(const TUGame&)>;

struct BalancedContributionsViolation {
  std::size_t i = 0;
  std::size_t j = 0;
  Rational value_i;               // phi_i(N)
  Rational value_i_without_j;     // phi_i(N \ {j})
  Rational value_j;               // phi_j(N)
  Rational value_j_without_i;     // phi_j(N \ {i})
};

struct BalancedContributionsResult {
  bool holds = true;
  std::optional<BalancedContributionsViolation> witness;
};

// Checks phi_i(N) - phi_i(N\{j}) == phi_j(N) - phi_j(N\{i}) for every pair.
BalancedContributionsResult balanced_contributions_check(
    const TUGame& game, const ValueOperator& value = shapley_value);

}  // namespace streamshare

#endif  // STREAMSHARE_GAMES_HPP_
