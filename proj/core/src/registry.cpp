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

#include "streamshare/registry.hpp"

#include <string>

#include "indices_detail.hpp"

namespace streamshare {
namespace {

struct Entry {
  const char* name;
  ParamSchema schema;
};

constexpr Entry kEntries[] = {
    {"pro-rata", {}},
    {"user-centric", {}},
    {"shapley", {}},
    {"spotify", {.tau = true}},
    {"per-user-threshold", {.tau = true}},
    {"deezer-cap", {.cap = true}},
    {"blend1", {.beta = true}},
    {"blend2", {.beta = true}},
    {"equal-division", {}},
    {"squared-blend", {}},
    {"top-takes-all", {}},
    {"binary", {}},
};

void reject(std::string_view name, const char* param) {
  throw Error(Errc::kInvalidParameter,
              "index '" + std::string(name) + "' does not take --" + param);
}

}  // namespace

const std::vector<std::string>& registry_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : kEntries) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

ParamSchema param_schema(std::string_view name) {
  for (const auto& e : kEntries) {
    if (name == e.name) return e.schema;
  }
  throw Error(Errc::kUnknownIndex, "unknown index '" + std::string(name) + "'");
}

Index make_index(std::string_view name, const IndexParams& params) {
  const ParamSchema schema = param_schema(name);
  if (params.tau && !schema.tau) reject(name, "tau");
  if (params.cap && !schema.cap) reject(name, "cap");
  if (params.beta && !schema.beta) reject(name, "beta");

  const StreamCount tau = params.tau.value_or(kDefaultThreshold);
  const StreamCount cap = params.cap.value_or(kDefaultCap);
  const Rational beta = params.beta.value_or(Rational(1, 2));
  if (tau < 0) throw Error(Errc::kInvalidParameter, "tau must be nonnegative");
  if (cap < 1) throw Error(Errc::kInvalidParameter, "cap must be at least 1");
  if (beta < 0) throw Error(Errc::kBetaOutOfRange, "beta must be nonnegative");

  const std::string id(name);
  if (id == "pro-rata") return Index(id, pro_rata, true);
  if (id == "user-centric") return Index(id, user_centric, true);
  if (id == "shapley") return Index(id, shapley_index, true);
  if (id == "spotify") {
    return Index(
        id, [tau](const StreamingProblem& p) { return detail::spotify_scores(tau, p); }, false,
        Errc::kAllArtistsBelowThreshold);
  }
  if (id == "per-user-threshold") {
    return Index(
        id, [tau](const StreamingProblem& p) { return detail::per_user_threshold_scores(tau, p); },
        true);
  }
  if (id == "deezer-cap") {
    return Index(
        id,
        [cap](const StreamingProblem& p) {
          return deezer_cap_index(cap, decompositions::pro_rata(), p);
        },
        true);
  }
  // Only the beta = 0 endpoint of blend1 is decomposable (it is user-centric).
  if (id == "blend1") {
    return Index(
        id, [beta](const StreamingProblem& p) { return blend_user_centric(beta, p); }, beta == 0);
  }
  if (id == "blend2") {
    return Index(id, [beta](const StreamingProblem& p) { return blend_pro_rata_reward(beta, p); });
  }
  if (id == "equal-division") return Index(id, equal_division);
  if (id == "squared-blend") return Index(id, squared_blend_index);
  if (id == "top-takes-all") return Index(id, top_streams_takes_all);
  return Index(id, binary_positive_index);
}

std::vector<Index> matrix_indices() {
  std::vector<Index> out;
  for (const char* name : {"pro-rata", "user-centric", "shapley", "equal-division", "spotify",
                           "squared-blend", "top-takes-all", "binary"}) {
    out.push_back(make_index(name));
  }
  return out;
}

}  // namespace streamshare
