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


#ifndef CWPATH_PAIRING_HPP_
#define CWPATH_PAIRING_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cwpath/construct.hpp"
#include "cwpath/paths.hpp"
#include "cwpath/topology.hpp"
#include "cwpath/tripod.hpp"

namespace cwpath {

// How many omega-paths take each terminal as their middle vertex. A path
// with middle a joins an (a,b)-path and an (a,c)-path, and so on.
struct PairSplit {
  int m_a = 0;
  int m_b = 0;
  int m_c = 0;

  int total() const noexcept { return m_a + m_b + m_c; }
  friend bool operator==(const PairSplit&, const PairSplit&) = default;
};

// Maximum number of omega-paths formed from x (a,b)-, y (a,c)- and
// z (b,c)-paths: min(floor((x+y+z)/2), x+y, y+z, z+x).
int pairing_capacity(int x, int y, int z);

// The lexicographically smallest (m_a, m_b, m_c) reaching the capacity.
PairSplit pairing_split(int x, int y, int z);

struct OmegaPathSet {
  std::array<VertexId, 3> omega{};
  std::vector<Path> paths;
};

// Every path is simple, lies in the view and visits all of omega; any two
// paths share exactly omega and no edge.
Verdict verify_omega_paths(const SubgraphView& view, const OmegaPathSet& set);

// Joins bundle paths at shared terminals following pairing_split. Throws
// UnverifiedStructure if the structure fails verify_tripod against its own
// counts.
OmegaPathSet pair_structure(const SubgraphView& view,
                            const TripodStructure& structure);

enum class SampleMode { Exhaustive, Stratified };

struct SampleSpec {
  SampleMode mode = SampleMode::Stratified;
  // Stratified mode: triples drawn, split evenly over the three copy
  // multiplicities.
  int count = 1000;
  std::uint64_t seed = 0;
  // Solver seeds are derived per triple from `seed`.
  ConstructOptions construct;
  int jobs = 1;
};

// The triples a SampleSpec evaluates, in evaluation order. Stratified
// samples are distinct.
std::vector<std::array<VertexId, 3>> sample_triples(const CayleyGraph& g,
                                                    const SampleSpec& spec);

struct Pi3Lower {
  int value = 0;
  std::size_t evaluated = 0;
  bool exhaustive = false;
  std::map<CaseId, int> cases;
  // First triple (in evaluation order) attaining the minimum.
  Construction witness;
  OmegaPathSet witness_paths;
  std::uint64_t witness_seed = 0;
};

// Minimum over the evaluated triples of the omega-paths obtained by pairing
// build_structure. Propagates ConstructionFailed.
Pi3Lower pi3_lower(const CayleyGraph& g, const SampleSpec& spec);

struct Pi3Upper {
  int value = 0;
  int k = 0;  // degree
  int r = 0;  // largest common neighborhood of a vertex triple
  int max_pair_common = 0;
  std::array<VertexId, 3> witness{};
  std::vector<VertexId> witness_common;
};

// floor((3k - r) / 4) with r found by exact search over all vertex pairs at
// distance two.
Pi3Upper pi3_upper(const CayleyGraph& g);

// floor((6n - 9) / 4).
int pi3_formula(int n);

struct Pi3Report {
  int n = 0;
  int lower = 0;
  int upper = 0;
  int formula = 0;
  int r = 0;
  std::size_t evaluated = 0;
  bool exhaustive = false;
  std::array<VertexId, 3> lower_witness{};
  std::array<VertexId, 3> r_witness{};

  bool match() const noexcept { return lower == upper && upper == formula; }
};

Pi3Report make_report(int n, const Pi3Lower& lower, const Pi3Upper& upper);

}  // namespace cwpath

#endif  // CWPATH_PAIRING_HPP_
