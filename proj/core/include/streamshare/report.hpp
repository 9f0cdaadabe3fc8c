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

#ifndef STREAMSHARE_REPORT_HPP_
#define STREAMSHARE_REPORT_HPP_

#include <nlohmann/json.hpp>

#include "streamshare/artist_values.hpp"
#include "streamshare/axioms.hpp"
#include "streamshare/games.hpp"
#include "streamshare/induced_games.hpp"

// JSON shapes of everything the tool reports. Rationals are always written
// as exact fraction strings; problems as CSV text.
namespace streamshare {

template <class Tag>
nlohmann::ordered_json to_json(const ArtistValues<Tag>& values) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (std::size_t k = 0; k < values.size(); ++k) {
    out[values.artists()[k]] = to_fraction_string(values[k]);
  }
  return out;
}

nlohmann::ordered_json to_json(const Instantiation& inst);
nlohmann::ordered_json to_json(const AxiomVerdict& verdict);
nlohmann::ordered_json to_json(const AxiomMatrix& matrix);
nlohmann::ordered_json to_json(const BalancedContributionsViolation& violation,
                               const TUGame& game);
nlohmann::ordered_json to_json(const ShapleyInducedViolation& violation,
                               const OwnedProfile& profile);

}  // namespace streamshare

#endif  // STREAMSHARE_REPORT_HPP_
