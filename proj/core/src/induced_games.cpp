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

#include <string>
#include <unordered_map>
#include <utility>

#include "streamshare/error.hpp"

namespace streamshare {
namespace {

// v(S) = sum_{i in S} share[i]
TUGame additive_game(const UserProfile& x, const std::vector<Rational>& share) {
  const std::size_t n = x.size();
  if (n > kMaxPlayers) {
    throw Error(Errc::kTooManyPlayers, std::to_string(n) + " artists in profile of user '" +
                                           std::string(x.user) + "'");
  }
  std::vector<Rational> values(std::size_t{1} << n);
  for (std::size_t s = 1; s < values.size(); ++s) {
    const auto lowest = static_cast<std::size_t>(__builtin_ctzll(s));
    values[s] = values[s & (s - 1)] + share[lowest];
  }
  return TUGame(std::vector<std::string>(x.artists.begin(), x.artists.end()), std::move(values));
}

}  // namespace

namespace induced_games {

InducedGameFamily pro_rata() {
  return [](const UserProfile& x) {
    return additive_game(x, std::vector<Rational>(x.streams.begin(), x.streams.end()));
  };
}

InducedGameFamily shapley() {
  return [](const UserProfile& x) {
    Coalition streamed = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x.streams[i] > 0) streamed |= Coalition{1} << i;
    }
    return TUGame::from_function(
        std::vector<std::string>(x.artists.begin(), x.artists.end()),
        [streamed](Coalition s) { return Rational((s & streamed) != 0 ? 1 : 0); });
  };
}

InducedGameFamily weighted(WeightSystem w) {
  return [w = std::move(w)](const UserProfile& x) {
    const Rational weight = w(x);
    std::vector<Rational> share(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) share[i] = weight * x.streams[i];
    return additive_game(x, share);
  };
}

InducedGameFamily probabilistic(ProbabilitySystem rho) {
  return [rho = std::move(rho)](const UserProfile& x) { return additive_game(x, rho(x)); };
}

}  // namespace induced_games

ShapleyInducedReport verify_shapley_induced(const DecompositionFunction& d,
                                            const InducedGameFamily& family,
                                            std::span<const OwnedProfile> sample) {
  ShapleyInducedReport report;
  for (std::size_t k = 0; k < sample.size(); ++k) {
    const OwnedProfile& profile = sample[k];
    const UserProfile view = profile.view();
    const std::size_t n = view.size();
    if (view.positive_count() > kMaxAuditPositive) {
      throw Error(Errc::kTooManyPlayers,
                  "profile of user '" + profile.user + "' streams " +
                      std::to_string(view.positive_count()) + " artists, limit is " +
                      std::to_string(kMaxAuditPositive));
    }
    if (n > kMaxPlayers) {
      throw Error(Errc::kTooManyPlayers, "profile of user '" + profile.user + "' has " +
                                             std::to_string(n) + " artists");
    }

    const TUGame game = family(view);
    Coalition streamed = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (view.streams[i] > 0) streamed |= Coalition{1} << i;
    }

    // Game value of the profile restricted to the streamed members of S.
    std::unordered_map<Coalition, Rational> restricted;
    auto restricted_value = [&](Coalition r) -> Rational {
      if (r == 0) return 0;
      if (auto it = restricted.find(r); it != restricted.end()) return it->second;
      OwnedProfile sub{profile.user, {}, {}};
      for (std::size_t i = 0; i < n; ++i) {
        if (r & (Coalition{1} << i)) {
          sub.artists.push_back(profile.artists[i]);
          sub.streams.push_back(profile.streams[i]);
        }
      }
      const TUGame sub_game = family(sub.view());
      Rational v = sub_game.value(sub_game.grand_coalition());
      restricted.emplace(r, v);
      return v;
    };

    const std::size_t count = std::size_t{1} << n;
    for (std::size_t s = 0; s < count; ++s) {
      const auto coalition = static_cast<Coalition>(s);
      const Rational expected = restricted_value(coalition & streamed);
      ++report.coalitions_checked;
      if (game.value(coalition) != expected) {
        report.violations.push_back({.kind = ShapleyInducedViolation::Kind::kRestriction,
                                     .profile = k,
                                     .coalition = coalition,
                                     .expected = expected,
                                     .actual = game.value(coalition)});
      }
    }

    const std::vector<Rational> sh = shapley_value(game);
    for (std::size_t i = 0; i < n; ++i) {
      const Rational di = d(i, view);
      if (di != sh[i]) {
        report.violations.push_back({.kind = ShapleyInducedViolation::Kind::kValue,
                                     .profile = k,
                                     .artist = i,
                                     .expected = di,
                                     .actual = sh[i]});
      }
    }
    ++report.profiles_checked;
  }
  return report;
}

}  // namespace streamshare
