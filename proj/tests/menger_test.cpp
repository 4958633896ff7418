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

#include <set>
#include <utility>
#include <vector>

#include "cwpath/error.hpp"
#include "cwpath/menger.hpp"
#include "cwpath/random.hpp"
#include "cwpath/topology.hpp"
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

TEST(Menger, DisjointPathsMatchBruteForceSeparator) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Small s = random_graph(10, 0.35, seed);
    const SubgraphView view(s.graph);
    for (VertexId u = 0; u < 10; ++u)
      for (VertexId v = u + 1; v < 10; ++v) {
        if (s.graph.adjacent(u, v)) continue;
        const PathFamily paths = max_internally_disjoint_paths(view, u, v);
        const std::array<VertexId, 2> ends{u, v};
        ASSERT_TRUE(verify_path_family(view, paths, ends).ok());
        ASSERT_EQ(static_cast<int>(paths.size()),
                  oracle::min_separator(s.adj, u, v))
            << "seed " << seed << " pair " << u << "," << v;
        const MinCut cut = min_vertex_cut(view, u, v);
        ASSERT_EQ(cut.vertices.size(), paths.size());
        ASSERT_FALSE(view.without(cut.vertices).reachable_from(u)[v]);
      }
  }
}

TEST(Menger, AdjacentPairCountsTheEdge) {
  const std::vector<std::pair<VertexId, VertexId>> edges{
      {0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 1}};
  const Graph g = Graph::from_edges(4, edges);
  const SubgraphView view(g);
  EXPECT_EQ(local_connectivity(view, 0, 1), 3);
  const MinCut cut = min_vertex_cut(view, 0, 1);
  EXPECT_TRUE(cut.adjacent_pair);
  EXPECT_EQ(cut.vertices.size(), 2u);
  EXPECT_EQ(max_internally_disjoint_paths(view, 0, 1).size(), 3u);
}

TEST(Menger, DualityOnCayleyGraphs) {
  for (int n : {4, 5}) {
    const CayleyGraph g = CayleyGraph::build(n, Family::Wheel);
    const SubgraphView full = g.full_view();
    Rng rng(n);
    for (int trial = 0; trial < 20; ++trial) {
      const VertexId u = static_cast<VertexId>(rng.below(g.vertex_count()));
      VertexId v = static_cast<VertexId>(rng.below(g.vertex_count()));
      if (v == u) v = (u + 1) % g.vertex_count();
      const PathFamily paths = max_internally_disjoint_paths(full, u, v);
      const MinCut cut = min_vertex_cut(full, u, v);
      const std::size_t edge = cut.adjacent_pair ? 1 : 0;
      ASSERT_EQ(paths.size(), cut.vertices.size() + edge);
      ASSERT_EQ(static_cast<int>(paths.size()), 2 * n - 2);
      if (!cut.adjacent_pair)
        ASSERT_FALSE(full.without(cut.vertices).reachable_from(u)[v]);
    }
  }
}

TEST(Menger, LocalConnectivityLimit) {
  const CayleyGraph g = CayleyGraph::build(4, Family::Wheel);
  EXPECT_EQ(local_connectivity(g.full_view(), 0, 23, 2), 2);
  EXPECT_EQ(local_connectivity(g.full_view(), 0, 23), 6);
  EXPECT_THROW(local_connectivity(g.full_view(), 5, 5), Error);
}

TEST(Menger, VertexConnectivityOfFamilies) {
  for (int n : {4, 5}) {
    const CayleyGraph cw = CayleyGraph::build(n, Family::Wheel);
    EXPECT_EQ(vertex_connectivity(cw.full_view()), 2 * n - 2);
    EXPECT_EQ(vertex_connectivity(cw.full_view(),
                                  ConnectivityHint::VertexTransitive),
              2 * n - 2);
    const SubgraphView bs =
        cw.full_view().restrict_labels(cw.bubble_sort_star_labels());
    EXPECT_EQ(min_pairwise_connectivity(bs), 2 * n - 3);
  }
}

TEST(Menger, FanReachesDistinctTargets) {
  const CayleyGraph g = CayleyGraph::build(5, Family::Wheel);
  const SubgraphView full = g.full_view();
  const std::vector<VertexId> targets = g.copy_members(CopyId{3});
  const VertexId x = g.copy_members(CopyId{5}).front();
  const PathFamily fan = k_fan(full, x, targets, 8);
  ASSERT_EQ(fan.size(), 8u);
  std::set<VertexId> ends;
  for (const Path& p : fan.paths) {
    EXPECT_EQ(p.front(), x);
    EXPECT_EQ(g.copy_of(p.back()).value, 3);
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i)
      EXPECT_NE(g.copy_of(p.vertices[i]).value, 3);
    ends.insert(p.back());
  }
  EXPECT_EQ(ends.size(), 8u);
  EXPECT_THROW(k_fan(full, x, targets, 9), InsufficientConnectivity);
}

TEST(Menger, SetToSetPathsAreFullyDisjoint) {
  const CayleyGraph g = CayleyGraph::build(5, Family::Wheel);
  const SubgraphView full = g.full_view();
  const auto from = g.copy_members(CopyId{1});
  const auto to = g.copy_members(CopyId{2});
  const PathFamily paths = disjoint_set_paths(full, from, to, 18);
  EXPECT_EQ(paths.kind, Disjointness::PairwiseFullyDisjoint);
  EXPECT_TRUE(verify_path_family(full, paths).ok());
  try {
    disjoint_set_paths(full, std::span(from).first(2), to, 3);
    FAIL();
  } catch (const InsufficientConnectivity& e) {
    EXPECT_EQ(e.achieved().size(), 2u);
  }
}

}  // namespace
}  // namespace cwpath
