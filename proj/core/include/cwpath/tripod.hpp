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

#ifndef CWPATH_TRIPOD_HPP_
#define CWPATH_TRIPOD_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cwpath/graph.hpp"
#include "cwpath/paths.hpp"

namespace cwpath {

// Bundle indices: 0 = (a,b), 1 = (a,c), 2 = (b,c).
enum class Bundle : int { AB = 0, AC = 1, BC = 2 };

inline constexpr std::array<std::array<int, 2>, 3> kBundleEnds{
    {{0, 1}, {0, 2}, {1, 2}}};

// Required bundle sizes.
struct StructureTarget {
  int x = 0;  // (a,b)-paths
  int y = 0;  // (a,c)-paths
  int z = 0;  // (b,c)-paths
  int d = 0;  // n = 2d or 2d+1; 0 for ad-hoc targets

  // (2d-2)^3 for n = 2d, (2d-2, 2d, 2d) for n = 2d+1.
  static StructureTarget for_degree(int n);

  int count(Bundle b) const;
  friend bool operator==(const StructureTarget&,
                         const StructureTarget&) = default;
};

// Three bundles of pair paths, simultaneously internally disjoint. Each path
// in bundle_ab runs from a to b, and so on.
struct TripodStructure {
  std::array<VertexId, 3> omega{};
  std::vector<Path> bundle_ab;
  std::vector<Path> bundle_ac;
  std::vector<Path> bundle_bc;

  std::vector<Path>& bundle(Bundle b);
  const std::vector<Path>& bundle(Bundle b) const;
  std::array<int, 3> counts() const;
};

// Counts, orientation, simplicity, no internal vertex in omega, and global
// internal-vertex and edge disjointness. Lists every violation.
Verdict verify_tripod(const SubgraphView& view,
                      const TripodStructure& structure,
                      const StructureTarget& target);

// Views up to this many vertices admit exhaustive search.
inline constexpr std::size_t kExhaustiveLimit = 40;

struct TripodBudget {
  std::uint64_t max_augmentations = 1'000'000;
  int restarts = 32;
  std::uint64_t seed = 0;
  // Run the exhaustive search when the heuristic fails on a small view.
  bool allow_exhaustive = true;
};

enum class TripodStrategy { Negotiated, Exhaustive };

enum class TripodFailure {
  None,
  // The heuristic ran out of augmentations or restarts.
  Budget,
  // A single-pair flow bound already rules the target out.
  PairBound,
  // Exhaustive search completed without a structure.
  Infeasible,
};

std::string to_string(TripodStrategy s);
std::string to_string(TripodFailure f);

struct TripodStats {
  std::uint64_t augmentations = 0;
  int restarts_used = 0;
  int rounds = 0;
  std::uint64_t search_nodes = 0;
};

struct TripodOutcome {
  std::optional<TripodStructure> structure;
  TripodStrategy strategy = TripodStrategy::Negotiated;
  TripodFailure failure = TripodFailure::None;
  std::string diagnostic;
  TripodStats stats;

  bool ok() const noexcept { return structure.has_value(); }
};

// Searches for a structure with exactly the target counts. Success is always
// re-verified with verify_tripod before it is returned.
TripodOutcome solve_tripod(const SubgraphView& view,
                           const std::array<VertexId, 3>& omega,
                           const StructureTarget& target,
                           const TripodBudget& budget = {});

// Exhaustive decision procedure; requires view.size() <= kExhaustiveLimit.
TripodOutcome solve_tripod_exhaustive(const SubgraphView& view,
                                      const std::array<VertexId, 3>& omega,
                                      const StructureTarget& target);

// Upper bound on the number of internally disjoint omega-paths: each such
// path spends four edge-ends at omega, and a non-terminal vertex can supply
// at most two of them. Also capped by degrees and by pair flows in which the
// third terminal has unbounded capacity.
int omega_path_upper_bound(const SubgraphView& view,
                           const std::array<VertexId, 3>& omega);

struct ExactPi {
  int value = 0;
  int upper_bound = 0;
  // A structure pairing into `value` omega-paths.
  TripodStructure witness;
};

// Maximum number of internally disjoint omega-paths. Throws
// OracleScaleExceeded above kExhaustiveLimit vertices.
ExactPi exact_pi(const SubgraphView& view,
                 const std::array<VertexId, 3>& omega);

}  // namespace cwpath

#endif  // CWPATH_TRIPOD_HPP_
