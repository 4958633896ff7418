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

#ifndef CWPATH_SRC_SPLIT_FLOW_HPP_
#define CWPATH_SRC_SPLIT_FLOW_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "cwpath/graph.hpp"
#include "cwpath/paths.hpp"

namespace cwpath::detail {

inline constexpr int kUnbounded = 1 << 20;

// Where flow enters or leaves a vertex of the split network.
struct Attachment {
  VertexId vertex = 0;
  int capacity = 1;
};

struct SplitFlowSpec {
  // S -> v_out: the vertex itself is not consumed (path source).
  std::vector<Attachment> sources_at_out;
  // S -> v_in: the vertex is the first vertex of its path and consumes its
  // own capacity.
  std::vector<Attachment> sources_at_in;
  // v_in -> T: the vertex ends its path without passing flow through.
  std::vector<Attachment> sinks_at_in;
  // v_out -> T.
  std::vector<Attachment> sinks_at_out;
  // Overrides of the default through-capacity 1.
  std::vector<Attachment> through;
  // An edge never used (e.g. to exclude a direct u-v edge).
  std::vector<std::pair<VertexId, VertexId>> skipped_edges;
};

// Unit vertex-capacity flow on the node-split network of a view:
// v_in -> v_out carries the vertex capacity, each edge becomes two arcs.
// Augmentation is breadth-first (shortest augmenting path) and explores arcs
// in ascending vertex order, so results are deterministic.
class SplitFlow {
 public:
  SplitFlow(const SubgraphView& view, const SplitFlowSpec& spec);

  // Augments until `limit` units (or no augmenting path); returns the total.
  int run(int limit = kUnbounded);
  int value() const noexcept { return value_; }
  std::size_t augmentations() const noexcept { return augmentations_; }

  // Flow decomposition into source-to-sink vertex sequences; flow cycles are
  // cancelled on the way.
  std::vector<Path> decompose() const;

  // Vertices whose removal separates the sources from the sinks, read off
  // the final residual network.
  std::vector<VertexId> cut() const;

 private:
  struct Arc {
    int to;
    int cap;
    int rev;
    int original;
  };

  int add_node();
  void add_arc(int from, int to, int cap);
  int in(VertexId v) const { return 2 * local_[v]; }
  int out(VertexId v) const { return 2 * local_[v] + 1; }
  bool augment();
  std::vector<std::uint8_t> residual_reachable() const;

  const SubgraphView* view_;
  std::vector<int> local_;
  std::vector<VertexId> global_;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<std::uint8_t> terminal_;
  int source_ = 0;
  int sink_ = 0;
  int value_ = 0;
  std::size_t augmentations_ = 0;
};

}  // namespace cwpath::detail

#endif  // CWPATH_SRC_SPLIT_FLOW_HPP_
