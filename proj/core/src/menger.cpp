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

#include "cwpath/menger.hpp"

#include <algorithm>
#include <string>

#include "split_flow.hpp"

namespace cwpath {
namespace {

using detail::Attachment;
using detail::kUnbounded;
using detail::SplitFlow;
using detail::SplitFlowSpec;

void require_member(const SubgraphView& view, VertexId v) {
  if (!view.contains(v))
    throw Error(Errc::VertexNotInView,
                "vertex " + std::to_string(v) + " is not in the view");
}

void require_pair(const SubgraphView& view, VertexId u, VertexId v) {
  require_member(view, u);
  require_member(view, v);
  if (u == v)
    throw Error(Errc::SameVertex,
                "endpoints coincide at vertex " + std::to_string(u));
}

SplitFlowSpec pair_spec(VertexId u, VertexId v, bool skip_direct) {
  SplitFlowSpec spec;
  spec.sources_at_out.push_back({u, kUnbounded});
  spec.sinks_at_in.push_back({v, kUnbounded});
  spec.through.push_back({u, 0});
  spec.through.push_back({v, 0});
  if (skip_direct) spec.skipped_edges.emplace_back(u, v);
  return spec;
}

}  // namespace

PathFamily max_internally_disjoint_paths(const SubgraphView& view, VertexId u,
                                         VertexId v) {
  require_pair(view, u, v);
  SplitFlow flow(view, pair_spec(u, v, false));
  flow.run();
  return PathFamily{flow.decompose(), Disjointness::PairwiseInternallyDisjoint};
}

int local_connectivity(const SubgraphView& view, VertexId u, VertexId v,
                       int limit) {
  require_pair(view, u, v);
  SplitFlow flow(view, pair_spec(u, v, false));
  return flow.run(limit < 0 ? kUnbounded : limit);
}

PathFamily k_fan(const SubgraphView& view, VertexId x,
                 std::span<const VertexId> targets, int k) {
  require_member(view, x);
  SplitFlowSpec spec;
  spec.sources_at_out.push_back({x, kUnbounded});
  spec.through.push_back({x, 0});
  for (VertexId y : targets) {
    require_member(view, y);
    if (y == x)
      throw Error(Errc::SameVertex, "fan source " + std::to_string(x) +
                                        " is also a target");
    spec.sinks_at_in.push_back({y, 1});
    spec.through.push_back({y, 0});
  }
  SplitFlow flow(view, spec);
  const int got = flow.run(k);
  PathFamily family{flow.decompose(), Disjointness::PairwiseInternallyDisjoint};
  if (got < k)
    throw InsufficientConnectivity(
        "fan from " + std::to_string(x) + " reaches " + std::to_string(got) +
            " of " + std::to_string(k) + " required targets",
        std::move(family), flow.cut());
  return family;
}

PathFamily disjoint_set_paths(const SubgraphView& view,
                              std::span<const VertexId> from,
                              std::span<const VertexId> to, int k) {
  std::vector<std::uint8_t> in_from(view.base().vertex_count(), 0);
  std::vector<std::uint8_t> in_to(view.base().vertex_count(), 0);
  SplitFlowSpec spec;
  for (VertexId x : from) {
    require_member(view, x);
    if (in_from[x]++)
      throw Error(Errc::DuplicateVertex,
                  "vertex " + std::to_string(x) + " listed twice");
    spec.sources_at_in.push_back({x, 1});
  }
  for (VertexId y : to) {
    require_member(view, y);
    if (in_to[y]++)
      throw Error(Errc::DuplicateVertex,
                  "vertex " + std::to_string(y) + " listed twice");
    spec.sinks_at_out.push_back({y, 1});
  }
  SplitFlow flow(view, spec);
  const int got = flow.run(k);
  PathFamily family{{}, Disjointness::PairwiseFullyDisjoint};
  for (Path& path : flow.decompose()) {
    // Keep the stretch from the last `from` vertex to the first `to` vertex
    // after it.
    std::size_t begin = 0;
    for (std::size_t i = 0; i < path.vertices.size(); ++i)
      if (in_from[path.vertices[i]]) begin = i;
    std::size_t end = begin;
    while (!in_to[path.vertices[end]]) ++end;
    family.paths.push_back(Path{std::vector<VertexId>(
        path.vertices.begin() + static_cast<std::ptrdiff_t>(begin),
        path.vertices.begin() + static_cast<std::ptrdiff_t>(end) + 1)});
  }
  if (got < k)
    throw InsufficientConnectivity(
        "found " + std::to_string(got) + " of " + std::to_string(k) +
            " disjoint set-to-set paths",
        std::move(family), flow.cut());
  return family;
}

int vertex_connectivity(const SubgraphView& view, ConnectivityHint hint) {
  const std::vector<VertexId> vs = view.vertices();
  const int n = static_cast<int>(vs.size());
  if (n <= 1) return 0;
  if (!view.is_connected()) return 0;
  int best = n - 1;
  const int rounds = hint == ConnectivityHint::VertexTransitive ? 1 : n;
  // Some minimum cut misses one of the first best+1 vertices.
  for (int i = 0; i < rounds && i <= best; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (view.adjacent(vs[i], vs[j])) continue;
      best = std::min(best, local_connectivity(view, vs[i], vs[j], best));
    }
  }
  return best;
}

int min_pairwise_connectivity(const SubgraphView& view) {
  const std::vector<VertexId> vs = view.vertices();
  if (vs.size() < 2) return 0;
  int best = kUnbounded;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      best = std::min(best, local_connectivity(view, vs[i], vs[j], best));
  return best;
}

MinCut min_vertex_cut(const SubgraphView& view, VertexId u, VertexId v) {
  require_pair(view, u, v);
  MinCut result;
  result.adjacent_pair = view.adjacent(u, v);
  SplitFlow flow(view, pair_spec(u, v, result.adjacent_pair));
  flow.run();
  result.vertices = flow.cut();
  return result;
}

}  // namespace cwpath
