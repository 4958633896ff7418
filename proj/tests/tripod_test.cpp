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

#include <utility>
#include <vector>

#include "cwpath/error.hpp"
#include "cwpath/menger.hpp"
#include "cwpath/pairing.hpp"
#include "cwpath/random.hpp"
#include "cwpath/topology.hpp"
#include "cwpath/tripod.hpp"
#include "oracles.hpp"

namespace cwpath {
namespace {

struct Small {
  Graph graph;
  oracle::Adj adj;
};

Small random_graph(int n, double density, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::pair<int, int>> plain;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform() < density) {
        edges.emplace_back(u, v);
        plain.emplace_back(u, v);
      }
  return {Graph::from_edges(n, edges), oracle::from_edges(n, plain)};
}

TEST(Tripod, ExactPiMatchesPathEnumeration) {
  int positive = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Small s = random_graph(8, 0.5, seed);
    const SubgraphView view(s.graph);
    const std::array<VertexId, 3> omega{0, 1, 2};
    const ExactPi exact = exact_pi(view, omega);
    const int expected = oracle::max_omega_paths(s.adj, {0, 1, 2});
    ASSERT_EQ(exact.value, expected) << "seed " << seed;
    EXPECT_GE(exact.upper_bound, exact.value);
    if (exact.value > 0) {
      ++positive;
      const OmegaPathSet set = pair_structure(view, exact.witness);
      EXPECT_EQ(static_cast<int>(set.paths.size()), exact.value);
      EXPECT_TRUE(verify_omega_paths(view, set).ok());
    }
  }
  EXPECT_GT(positive, 10);
}

TEST(Tripod, ExactPiOnTheSmallestWheel) {
  const CayleyGraph g = CayleyGraph::build(4, Family::Wheel);
  const SubgraphView full = g.full_view();
  // Three vertices sharing three common neighbors cap the count at 3.
  const ExactPi tight = exact_pi(full, {0, 3, 4});
  EXPECT_EQ(tight.value, 3);
  const ExactPi loose = exact_pi(full, {0, 1, 2});
  EXPECT_GE(loose.value, 3);
  EXPECT_THROW(exact_pi(CayleyGraph::build(5, Family::Wheel).full_view(),
                        {0, 1, 2}),
               Error);
}

TEST(Tripod, ExactPiIsMonotoneUnderDeletion) {
  const CayleyGraph g = CayleyGraph::build(4, Family::Wheel);
  const SubgraphView full = g.full_view();
  const std::array<VertexId, 3> omega{0, 7, 16};
  int previous = exact_pi(full, omega).value;
  std::vector<VertexId> removed;
  for (VertexId v : {5u, 11u, 20u, 23u}) {
    removed.push_back(v);
    const int now = exact_pi(full.without(removed), omega).value;
    EXPECT_LE(now, previous);
    previous = now;
  }
}

TEST(Tripod, PairConnectivityIsNotABound) {
  // u and v meet only through the terminal w, so kappa(u, v) = 1, yet
  // u-x1-w-y1-v and u-x2-w-y2-v are two omega-paths.
  const std::vector<std::pair<VertexId, VertexId>> edges{
      {0, 3}, {0, 4}, {3, 2}, {4, 2}, {2, 5}, {2, 6}, {5, 1}, {6, 1}};
  const Graph graph = Graph::from_edges(7, edges);
  const SubgraphView view(graph);
  EXPECT_EQ(local_connectivity(view, 0, 1), 1);
  const ExactPi exact = exact_pi(view, {0, 1, 2});
  EXPECT_EQ(exact.value, 2);
  EXPECT_GE(exact.upper_bound, 2);
  EXPECT_EQ(oracle::max_omega_paths(
                oracle::from_edges(7, {{0, 3}, {0, 4}, {3, 2}, {4, 2},
                                       {2, 5}, {2, 6}, {5, 1}, {6, 1}}),
                {0, 1, 2}),
            2);
}

TEST(Tripod, DegreeBoundsExactPi) {
  for (std::uint64_t seed = 50; seed < 60; ++seed) {
    const Small s = random_graph(9, 0.4, seed);
    const SubgraphView view(s.graph);
    const std::array<VertexId, 3> omega{0, 4, 8};
    const ExactPi exact = exact_pi(view, omega);
    for (VertexId t : omega) EXPECT_LE(exact.value, view.degree(t));
    EXPECT_LE(exact.value, exact.upper_bound);
  }
}

TEST(Tripod, SolverMeetsFamilyTargets) {
  for (int n : {4, 5, 6}) {
    const CayleyGraph g = CayleyGraph::build(n, Family::Wheel);
    const StructureTarget target = StructureTarget::for_degree(n);
    Rng rng(100 + n);
    for (int trial = 0; trial < 5; ++trial) {
      std::array<VertexId, 3> omega{};
      for (auto& v : omega) v = static_cast<VertexId>(rng.below(g.vertex_count()));
      if (omega[0] == omega[1] || omega[1] == omega[2] || omega[0] == omega[2])
        continue;
      TripodBudget budget;
      budget.seed = trial;
      const TripodOutcome out = solve_tripod(g.full_view(), omega, target, budget);
      ASSERT_TRUE(out.ok()) << out.diagnostic;
      EXPECT_TRUE(verify_tripod(g.full_view(), *out.structure, target).ok());
    }
  }
}

TEST(Tripod, TargetsPerDegree) {
  EXPECT_EQ(StructureTarget::for_degree(4), (StructureTarget{2, 2, 2, 2}));
  EXPECT_EQ(StructureTarget::for_degree(5), (StructureTarget{2, 4, 4, 2}));
  EXPECT_EQ(StructureTarget::for_degree(7), (StructureTarget{4, 6, 6, 3}));
  EXPECT_EQ(StructureTarget::for_degree(8), (StructureTarget{6, 6, 6, 4}));
}

TEST(Tripod, PairBoundIsReported) {
  const CayleyGraph g = CayleyGraph::build(4, Family::Wheel);
  const TripodOutcome out =
      solve_tripod(g.full_view(), {0, 1, 2}, StructureTarget{7, 1, 1, 0});
  EXPECT_FALSE(out.ok());
  EXPECT_EQ(out.failure, TripodFailure::PairBound);
}

class VerifyTripodNegative : public ::testing::Test {
 protected:
  void SetUp() override {
    const TripodOutcome out =
        solve_tripod(g.full_view(), omega, StructureTarget::for_degree(5));
    ASSERT_TRUE(out.ok());
    good = *out.structure;
    ASSERT_TRUE(verify_tripod(g.full_view(), good, target).ok());
  }

  bool rejects(const TripodStructure& s) const {
    return !verify_tripod(g.full_view(), s, target).ok();
  }

  CayleyGraph g = CayleyGraph::build(5, Family::Wheel);
  std::array<VertexId, 3> omega{0, 33, 77};
  StructureTarget target = StructureTarget::for_degree(5);
  TripodStructure good;
};

TEST_F(VerifyTripodNegative, MissingPath) {
  TripodStructure s = good;
  s.bundle_bc.pop_back();
  EXPECT_TRUE(rejects(s));
}

TEST_F(VerifyTripodNegative, SharedInternalVertex) {
  TripodStructure s = good;
  s.bundle_ac[1] = s.bundle_ac[0];
  EXPECT_TRUE(rejects(s));
}

TEST_F(VerifyTripodNegative, BrokenEdge) {
  TripodStructure s = good;
  auto& path = s.bundle_ab[0].vertices;
  path.insert(path.begin() + 1, omega[2] == 1 ? 2 : 1);
  EXPECT_TRUE(rejects(s));
}

TEST_F(VerifyTripodNegative, WrongEndpoints) {
  TripodStructure s = good;
  s.bundle_ab[0] = s.bundle_ab[0].reversed();
  EXPECT_TRUE(rejects(s));
}

TEST_F(VerifyTripodNegative, PassesThroughTerminal) {
  TripodStructure s = good;
  // Route an a-b path through c by gluing an a-c path and a c-b path.
  auto glued = s.bundle_ac[0].vertices;
  const auto& tail = s.bundle_bc[0].reversed().vertices;
  glued.insert(glued.end(), tail.begin() + 1, tail.end());
  s.bundle_ab[0].vertices = glued;
  EXPECT_TRUE(rejects(s));
}

}  // namespace
}  // namespace cwpath
