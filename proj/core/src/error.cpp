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

#include "streamshare/error.hpp"

namespace streamshare {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kEmptyUserColumn: return "EmptyUserColumn";
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kNegativeOrNonIntegerStream: return "NegativeOrNonIntegerStream";
    case Errc::kDuplicateId: return "DuplicateId";
    case Errc::kUnknownArtist: return "UnknownArtist";
    case Errc::kUnknownUser: return "UnknownUser";
    case Errc::kWouldEmptyProblem: return "WouldEmptyProblem";
    case Errc::kZeroIndexSum: return "ZeroIndexSum";
    case Errc::kAllArtistsBelowThreshold: return "AllArtistsBelowThreshold";
    case Errc::kNonPositiveWeight: return "NonPositiveWeight";
    case Errc::kInvalidProbabilitySystem: return "InvalidProbabilitySystem";
    case Errc::kNegativeDecomposition: return "NegativeDecomposition";
    case Errc::kNullArtistViolation: return "NullArtistViolation";
    case Errc::kBetaOutOfRange: return "BetaOutOfRange";
    case Errc::kUnknownIndex: return "UnknownIndex";
    case Errc::kInvalidParameter: return "InvalidParameter";
    case Errc::kTooManyPlayers: return "TooManyPlayers";
    case Errc::kUnsatisfiableConstraints: return "UnsatisfiableConstraints";
    case Errc::kParse: return "ParseError";
    case Errc::kIo: return "IoError";
    case Errc::kNoWork: return "NoWork";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

}  // namespace streamshare
