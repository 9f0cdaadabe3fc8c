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

#ifndef STREAMSHARE_SRC_INDICES_DETAIL_HPP_
#define STREAMSHARE_SRC_INDICES_DETAIL_HPP_

#include "streamshare/indices.hpp"

namespace streamshare::detail {

// Raw evaluations that may legitimately sum to zero; the public functions of
// the same name add the positive-sum check.
IndexVector spotify_scores(StreamCount tau, const StreamingProblem& p);
IndexVector per_user_threshold_scores(StreamCount tau, const StreamingProblem& p);

void require_beta_in_range(const Rational& beta, std::size_t artists);

}  // namespace streamshare::detail

#endif  // STREAMSHARE_SRC_INDICES_DETAIL_HPP_
