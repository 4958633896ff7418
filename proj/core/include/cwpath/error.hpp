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

#ifndef CWPATH_ERROR_HPP_
#define CWPATH_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace cwpath {

enum class Errc {
  DegreeTooSmall,
  DegreeTooLarge,
  DegreeMismatch,
  TranspositionOutOfRange,
  RankOutOfRange,
  ParseError,
  WrongFamily,
  SameCopy,
  InvalidCopy,
  EmptyCopySet,
  VertexNotInView,
  SameVertex,
  DuplicateVertex,
  PreconditionFailed,
  InsufficientConnectivity,
  OracleScaleExceeded,
  UnverifiedStructure,
  ConstructionFailed,
  SchemaError,
  VersionMismatch,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cwpath

#endif  // CWPATH_ERROR_HPP_
