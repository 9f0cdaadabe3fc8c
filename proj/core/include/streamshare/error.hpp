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

#ifndef STREAMSHARE_ERROR_HPP_
#define STREAMSHARE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace streamshare {

enum class Errc {
  // Problem construction and lookup.
  kEmptyUserColumn,
  kDimensionMismatch,
  kNegativeOrNonIntegerStream,
  kDuplicateId,
  kUnknownArtist,
  kUnknownUser,
  kWouldEmptyProblem,
  // Index evaluation.
  kZeroIndexSum,
  kAllArtistsBelowThreshold,
  kNonPositiveWeight,
  kInvalidProbabilitySystem,
  kNegativeDecomposition,
  kNullArtistViolation,
  kBetaOutOfRange,
  kUnknownIndex,
  kInvalidParameter,
  // Games.
  kTooManyPlayers,
  // Axiom harness.
  kUnsatisfiableConstraints,
  // Input and orchestration.
  kParse,
  kIo,
  kNoWork,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace streamshare

#endif  // STREAMSHARE_ERROR_HPP_
