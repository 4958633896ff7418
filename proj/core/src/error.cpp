// Copyright 2026 The cwpath Authors.
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

#include "cwpath/error.hpp"

namespace cwpath {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::TranspositionOutOfRange: return "TranspositionOutOfRange";
    case Errc::RankOutOfRange: return "RankOutOfRange";
    case Errc::ParseError: return "ParseError";
    case Errc::WrongFamily: return "WrongFamily";
    case Errc::SameCopy: return "SameCopy";
    case Errc::InvalidCopy: return "InvalidCopy";
    case Errc::EmptyCopySet: return "EmptyCopySet";
    case Errc::VertexNotInView: return "VertexNotInView";
    case Errc::SameVertex: return "SameVertex";
    case Errc::DuplicateVertex: return "DuplicateVertex";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::InsufficientConnectivity: return "InsufficientConnectivity";
    case Errc::OracleScaleExceeded: return "OracleScaleExceeded";
    case Errc::UnverifiedStructure: return "UnverifiedStructure";
    case Errc::ConstructionFailed: return "ConstructionFailed";
    case Errc::SchemaError: return "SchemaError";
    case Errc::VersionMismatch: return "VersionMismatch";
  }
  return "Unknown";
}

}  // namespace cwpath
