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

#ifndef STREAMSHARE_REGISTRY_HPP_
#define STREAMSHARE_REGISTRY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "streamshare/indices.hpp"

namespace streamshare {

struct IndexParams {
  std::optional<StreamCount> tau;
  std::optional<StreamCount> cap;
  std::optional<Rational> beta;
};

// Which parameters an index accepts.
struct ParamSchema {
  bool tau = false;
  bool cap = false;
  bool beta = false;
};

inline constexpr StreamCount kDefaultThreshold = 1000;
inline constexpr StreamCount kDefaultCap = 1000;

// pro-rata, user-centric, shapley, spotify, per-user-threshold, deezer-cap,
// blend1, blend2, equal-division, squared-blend, top-takes-all, binary
const std::vector<std::string>& registry_names();

// Throws kUnknownIndex.
ParamSchema param_schema(std::string_view name);

// Builds a registry index. Parameters outside the index's schema, or out of
// range, throw kInvalidParameter; unknown names throw kUnknownIndex.
// Defaults: tau = 1000, cap = 1000, beta = 1/2.
Index make_index(std::string_view name, const IndexParams& params = {});

// The eight indices of the axiom matrix, with default parameters.
std::vector<Index> matrix_indices();

}  // namespace streamshare

#endif  // STREAMSHARE_REGISTRY_HPP_
