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

#ifndef CWPATH_MENGER_HPP_
#define CWPATH_MENGER_HPP_

#include <span>
#include <vector>

#include "cwpath/error.hpp"
#include "cwpath/graph.hpp"
#include "cwpath/paths.hpp"

namespace cwpath {

// Thrown when a flow falls short of the requested count. Carries the best
// family found and a vertex cut certifying the shortfall.
class InsufficientConnectivity : public Error {
 public:
  InsufficientConnectivity(const std::string& what, PathFamily achieved,
                           std::vector<VertexId> witness_cut)
      : Error(Errc::InsufficientConnectivity, what),
        achieved_(std::move(achieved)),
        witness_cut_(std::move(witness_cut)) {}

  const PathFamily& achieved() const noexcept { return achieved_; }
  const std::vector<VertexId>& witness_cut() const noexcept {
    return witness_cut_;
  }

 private:
  PathFamily achieved_;
  std::vector<VertexId> witness_cut_;
};

// Maximum family of internally disjoint (u,v)-paths. A direct edge counts as
// one path.
PathFamily max_internally_disjoint_paths(const SubgraphView& view, VertexId u,
                                         VertexId v);

// kappa_view(u, v), stopping early once `limit` paths are found.
int local_connectivity(const SubgraphView& view, VertexId u, VertexId v,
                       int limit = -1);

// k paths from x to distinct members of `targets`, pairwise sharing only x
// and internally avoiding `targets`.
PathFamily k_fan(const SubgraphView& view, VertexId x,
                 std::span<const VertexId> targets, int k);

// k vertex-disjoint paths, each starting in `from` and ending in `to` with
// internal vertices outside both sets. Shared members become zero-length
// paths.
PathFamily disjoint_set_paths(const SubgraphView& view,
                              std::span<const VertexId> from,
                              std::span<const VertexId> to, int k);

enum class ConnectivityHint {
  None,
  // The view is a vertex-transitive graph: one representative vertex
  // suffices.
  VertexTransitive,
};

// Exact vertex connectivity; 0 when disconnected, |V|-1 when complete.
int vertex_connectivity(const SubgraphView& view,
                        ConnectivityHint hint = ConnectivityHint::None);

// min over every vertex pair (adjacent pairs included) of kappa_view(u, v).
int min_pairwise_connectivity(const SubgraphView& view);

struct MinCut {
  std::vector<VertexId> vertices;
  // For adjacent u, v the cut is taken in the view minus the edge uv.
  bool adjacent_pair = false;
};

MinCut min_vertex_cut(const SubgraphView& view, VertexId u, VertexId v);

}  // namespace cwpath

#endif  // CWPATH_MENGER_HPP_
