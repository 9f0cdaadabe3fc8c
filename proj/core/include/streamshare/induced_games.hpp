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

#ifndef STREAMSHARE_INDUCED_GAMES_HPP_
#define STREAMSHARE_INDUCED_GAMES_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "streamshare/games.hpp"
#include "streamshare/indices.hpp"

namespace streamshare {

// Builds the game v^{j,x} on the profile's artists for one user profile.
using InducedGameFamily = std::function<TUGame(const UserProfile&)>;

namespace induced_games {
// v(S) = sum_{i in S} x_i
InducedGameFamily pro_rata();
// v(S) = 1 if S meets the streamed artists, else 0
InducedGameFamily shapley();
// v(S) = sum_{i in S} w(j, x) x_i
InducedGameFamily weighted(WeightSystem w);
// v(S) = sum_{i in S} rho_i(j, x)
InducedGameFamily probabilistic(ProbabilitySystem rho);
}  // namespace induced_games

// Profiles fed to the audit may have at most this many streamed artists.
inline constexpr std::size_t kMaxAuditPositive = 12;

struct ShapleyInducedViolation {
  enum class Kind {
    kRestriction,  // v^{j,x}(S) differs from the game of the restricted profile
    kValue,        // d(i, j, x) differs from Sh_i(v^{j,x})
  };
  Kind kind = Kind::kValue;
  std::size_t profile = 0;   // position in the sample
  Coalition coalition = 0;   // for kRestriction
  std::size_t artist = 0;    // for kValue
  Rational expected;         // restricted game value, or d(i, j, x)
  Rational actual;           // v^{j,x}(S), or Sh_i
};

struct ShapleyInducedReport {
  std::size_t profiles_checked = 0;
  std::size_t coalitions_checked = 0;
  std::vector<ShapleyInducedViolation> violations;

  bool ok() const { return violations.empty(); }
};

// Checks, for every sampled profile, that the family is consistent under
// restriction to S cap L^j for every coalition S, and that d equals the
// Shapley value of the induced game. Throws kTooManyPlayers when a profile
// streams more than kMaxAuditPositive artists.
ShapleyInducedReport verify_shapley_induced(const DecompositionFunction& d,
                                            const InducedGameFamily& family,
                                            std::span<const OwnedProfile> sample);

}  // namespace streamshare

#endif  // STREAMSHARE_INDUCED_GAMES_HPP_
