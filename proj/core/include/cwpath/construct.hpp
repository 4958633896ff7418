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

#ifndef CWPATH_CONSTRUCT_HPP_
#define CWPATH_CONSTRUCT_HPP_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cwpath/topology.hpp"
#include "cwpath/tripod.hpp"

namespace cwpath {

enum class CaseId {
  Even,
  OddCase1_1,
  OddCase1_2_1,
  OddCase1_2_2,
  OddCase2,
  OddCase3_1,
  OddCase3_2,
  OddCase3_3,
  FallbackGeneric,
};

std::string to_string(CaseId id);
CaseId parse_case_id(const std::string& text);

struct CaseTrace {
  CaseId case_id = CaseId::Even;
  // Copies of the terminals in the structure's (a, b, c) order.
  std::array<CopyId, 3> copies{};
  // Named vertex sets used by the construction (a', g, X1, N, ...).
  std::map<std::string, std::vector<VertexId>> auxiliary;
  // The j of b = a(1 j j+1) in the all-common-neighbor configuration.
  std::optional<int> j;
  // Why the dedicated route was abandoned, when it was.
  std::string fallback_reason;
  std::vector<std::string> notes;
};

struct ConstructOptions {
  // Throw ConstructionFailed instead of falling back to the generic solver.
  bool strict = false;
  TripodBudget budget;
};

struct Construction {
  // structure.omega holds the input terminals in the order the construction
  // labelled them (a, b, c); bundle sizes follow that labelling.
  TripodStructure structure;
  CaseTrace trace;
  TripodStats stats;
  // Routes taken, outermost first, e.g. {"even", "solver:negotiated"}.
  std::vector<std::string> strategy_path;
};

// Builds a verified structure meeting StructureTarget::for_degree(n) in the
// wheel graph. Throws ConstructionFailed if the dedicated route fails under
// strict mode, or if the generic fallback fails too.
Construction build_structure(const CayleyGraph& g,
                             const std::array<VertexId, 3>& omega,
                             const ConstructOptions& options = {});

// The odd-n routes by copy multiplicity; each throws ConstructionFailed when
// one of its steps does not go through.
Construction construct_same_copy(const CayleyGraph& g,
                                 const std::array<VertexId, 3>& omega,
                                 const ConstructOptions& options = {});
Construction construct_two_copies(const CayleyGraph& g,
                                  const std::array<VertexId, 3>& omega,
                                  const ConstructOptions& options = {});
Construction construct_three_copies(const CayleyGraph& g,
                                    const std::array<VertexId, 3>& omega,
                                    const ConstructOptions& options = {});

}  // namespace cwpath

#endif  // CWPATH_CONSTRUCT_HPP_
