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

#ifndef CWPATH_TOPOLOGY_HPP_
#define CWPATH_TOPOLOGY_HPP_

#include <array>
#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cwpath/graph.hpp"
#include "cwpath/permutation.hpp"

namespace cwpath {

// Copy CW_n^i: the permutations with sigma(n) = i.
struct CopyId {
  int value = 0;
  friend auto operator<=>(const CopyId&, const CopyId&) = default;
};

// The three cross-copy neighbors of a wheel-graph vertex:
// v(1 n), v(n-1 n) and v(2 n).
struct OutsideNeighbors {
  VertexId plus = 0;
  VertexId minus = 0;
  VertexId star = 0;

  std::array<VertexId, 3> as_array() const { return {plus, minus, star}; }
};

// Cay(S_n, S) for the bubble-sort star or wheel generating set. Vertices are
// Lehmer ranks; arc labels are indices into generators().members.
class CayleyGraph {
 public:
  static CayleyGraph build(int n, Family family);

  int n() const noexcept { return n_; }
  Family family() const noexcept { return generators_.family; }
  const GeneratorSet& generators() const noexcept { return generators_; }
  const Graph& graph() const noexcept { return graph_; }
  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
  SubgraphView full_view() const { return SubgraphView(graph_); }

  const Permutation& permutation(VertexId v) const { return perms_[v]; }
  VertexId vertex(const Permutation& sigma) const;

  CopyId copy_of(VertexId v) const { return CopyId{perms_[v](n_)}; }
  std::vector<VertexId> copy_members(CopyId copy) const;
  VertexId neighbor_via(VertexId v, Transposition t) const;
  OutsideNeighbors outside_neighbors(VertexId v) const;

  // Label mask of the bubble-sort star generators, i.e. every label except
  // (2 n). Restricting a wheel view by it yields the spanning BS_n.
  std::uint32_t bubble_sort_star_labels() const;

  // sigma -> h * sigma, an automorphism mapping copy i to copy h(i).
  VertexId left_translate(const Permutation& h, VertexId v) const;

 private:
  int n_ = 0;
  GeneratorSet generators_;
  Graph graph_;
  std::vector<Permutation> perms_;
};

// Edges with one end in copy i and the other in copy j (u in i, v in j).
std::vector<std::pair<VertexId, VertexId>> cross_edges(const CayleyGraph& g,
                                                       CopyId i, CopyId j);

SubgraphView copy_union(const CayleyGraph& g, std::span<const CopyId> copies);
SubgraphView delete_copies(const CayleyGraph& g,
                           std::span<const CopyId> copies);

// Exact intersection of the neighbor sets of two or three distinct vertices.
std::vector<VertexId> common_neighbors(const SubgraphView& view,
                                       std::span<const VertexId> vertices);

// Left-translates the triple so that its smallest representative contains
// the identity; used to memoize per-orbit results.
std::array<VertexId, 3> canonical_triple(const CayleyGraph& g,
                                         std::array<VertexId, 3> triple);

std::string to_dot(const CayleyGraph& g);
std::string to_edge_list(const CayleyGraph& g);

}  // namespace cwpath

#endif  // CWPATH_TOPOLOGY_HPP_
