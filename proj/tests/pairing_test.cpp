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


#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "cwpath/error.hpp"
#include "cwpath/pairing.hpp"
#include "oracles.hpp"

namespace cwpath {
namespace {

TEST(Pairing, CapacityMatchesBruteForce) {
  for (int x = 0; x <= 20; ++x)
    for (int y = 0; y <= 20; ++y)
      for (int z = 0; z <= 20; ++z) {
        ASSERT_EQ(pairing_capacity(x, y, z), oracle::pairing_max(x, y, z))
            << x << "," << y << "," << z;
        const PairSplit s = pairing_split(x, y, z);
        ASSERT_EQ(s.total(), pairing_capacity(x, y, z));
        ASSERT_LE(s.m_a + s.m_b, x);
        ASSERT_LE(s.m_a + s.m_c, y);
        ASSERT_LE(s.m_b + s.m_c, z);
      }
  EXPECT_THROW(pairing_capacity(-1, 0, 0), Error);
}

TEST(Pairing, FamilyTargetsGiveTheClosedForm) {
  for (int n = 4; n <= 100; ++n) {
    const StructureTarget t = StructureTarget::for_degree(n);
    EXPECT_EQ(pairing_capacity(t.x, t.y, t.z), (6 * n - 9) / 4) << n;
    EXPECT_EQ(pi3_formula(n), (3 * (2 * n - 2) - 3) / 4) << n;
  }
}

TEST(Pairing, SplitsForFamilyTargets) {
  EXPECT_EQ(pairing_split(2, 2, 2), (PairSplit{1, 1, 1}));
  // n = 2d + 1: the split is d-1, d-1, d+1.
  for (int d = 2; d <= 6; ++d) {
    const PairSplit s = pairing_split(2 * d - 2, 2 * d, 2 * d);
    EXPECT_EQ(s, (PairSplit{d - 1, d - 1, d + 1}));
  }
}

TEST(Pairing, StructureJoinsIntoOmegaPaths) {
  const CayleyGraph g = CayleyGraph::build(5, Family::Wheel);
  const SubgraphView full = g.full_view();
  const TripodOutcome out =
      solve_tripod(full, {0, 50, 100}, StructureTarget::for_degree(5));
  ASSERT_TRUE(out.ok());
  const OmegaPathSet set = pair_structure(full, *out.structure);
  EXPECT_EQ(set.paths.size(), 5u);
  EXPECT_TRUE(verify_omega_paths(full, set).ok());
  for (const Path& p : set.paths)
    for (VertexId t : set.omega)
      EXPECT_NE(std::find(p.vertices.begin(), p.vertices.end(), t),
                p.vertices.end());

  OmegaPathSet broken = set;
  broken.paths[1] = broken.paths[0];
  EXPECT_FALSE(verify_omega_paths(full, broken).ok());

  TripodStructure bad = *out.structure;
  bad.bundle_ab.push_back(bad.bundle_ab.front());
  EXPECT_THROW(pair_structure(full, bad), Error);
}

TEST(Pairing, StratifiedSamplesCoverAllMultiplicities) {
  const CayleyGraph g = CayleyGraph::build(5, Family::Wheel);
  SampleSpec spec;
  spec.count = 300;
  spec.seed = 9;
  const auto triples = sample_triples(g, spec);
  EXPECT_EQ(triples.size(), 300u);
  std::array<int, 4> by_copies{};
  std::set<std::array<VertexId, 3>> distinct;
  for (const auto& t : triples) {
    std::set<int> copies;
    for (VertexId v : t) copies.insert(g.copy_of(v).value);
    ++by_copies[copies.size()];
    auto s = t;
    std::sort(s.begin(), s.end());
    distinct.insert(s);
  }
  EXPECT_EQ(distinct.size(), triples.size());
  EXPECT_EQ(by_copies[1], 100);
  EXPECT_EQ(by_copies[2], 100);
  EXPECT_EQ(by_copies[3], 100);
  EXPECT_EQ(sample_triples(g, spec), triples);

  SampleSpec all;
  all.mode = SampleMode::Exhaustive;
  EXPECT_EQ(sample_triples(CayleyGraph::build(4, Family::Wheel), all).size(),
            2024u);
}

TEST(Pairing, UpperBoundFromCommonNeighbors) {
  const int expected_r[] = {3, 3, 3};
  for (int n : {4, 5, 6}) {
    const CayleyGraph g = CayleyGraph::build(n, Family::Wheel);
    const Pi3Upper up = pi3_upper(g);
    EXPECT_EQ(up.k, 2 * n - 2);
    EXPECT_EQ(up.r, expected_r[n - 4]);
    EXPECT_EQ(up.max_pair_common, 3);
    EXPECT_EQ(up.value, pi3_formula(n));
    EXPECT_EQ(up.witness_common.size(), static_cast<std::size_t>(up.r));
    for (VertexId w : up.witness_common)
      for (VertexId t : up.witness) EXPECT_TRUE(g.graph().adjacent(w, t));
  }
}

TEST(Pairing, LowerBoundAtDegreeFour) {
  const CayleyGraph g = CayleyGraph::build(4, Family::Wheel);
  SampleSpec spec;
  spec.mode = SampleMode::Exhaustive;
  spec.seed = 1;
  const Pi3Lower low = pi3_lower(g, spec);
  EXPECT_EQ(low.value, 3);
  EXPECT_EQ(low.evaluated, 2024u);
  EXPECT_TRUE(low.exhaustive);
  EXPECT_EQ(low.cases.at(CaseId::Even), 2024);
  EXPECT_TRUE(verify_omega_paths(g.full_view(), low.witness_paths).ok());
  const Pi3Report report = make_report(4, low, pi3_upper(g));
  EXPECT_TRUE(report.match());
  EXPECT_EQ(report.formula, 3);
}

TEST(Pairing, ParallelSweepMatchesSerial) {
  const CayleyGraph g = CayleyGraph::build(5, Family::Wheel);
  SampleSpec spec;
  spec.count = 60;
  spec.seed = 4;
  const Pi3Lower one = pi3_lower(g, spec);
  spec.jobs = 3;
  const Pi3Lower three = pi3_lower(g, spec);
  EXPECT_EQ(one.value, 5);
  EXPECT_EQ(three.value, one.value);
  EXPECT_EQ(three.cases, one.cases);
  EXPECT_EQ(three.witness.structure.omega, one.witness.structure.omega);
}

}  // namespace
}  // namespace cwpath
