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

#ifndef CWPATH_GRAPH_HPP_
#define CWPATH_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cwpath/permutation.hpp"

namespace cwpath {

struct Arc {
  VertexId to = 0;
  // Generator index for Cayley graphs; 0 for plain graphs.
  std::uint8_t label = 0;
};

// Simple undirected graph with labelled arcs. Each adjacency list is kept in
// ascending neighbor order, which fixes every traversal order downstream.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

  static Graph from_edges(std::size_t vertex_count,
                          std::span<const std::pair<VertexId, VertexId>> edges);

  // Ignores duplicate edges; rejects loops.
  void add_edge(VertexId u, VertexId v, std::uint8_t label = 0);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::span<const Arc> arcs(VertexId v) const { return adjacency_[v]; }
  int degree(VertexId v) const {
    return static_cast<int>(adjacency_[v].size());
  }
  bool adjacent(VertexId u, VertexId v) const;
  // Label of edge {u, v}; -1 if absent.
  int label(VertexId u, VertexId v) const;

 private:
  std::vector<std::vector<Arc>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Induced subgraph of a Graph described by a vertex predicate and an allowed
// label set. Views never copy adjacency; they compose by intersection.
class SubgraphView {
 public:
  static constexpr std::uint32_t kAllLabels = ~std::uint32_t{0};

  explicit SubgraphView(const Graph& base);
  SubgraphView(const Graph& base, std::vector<std::uint8_t> mask,
               std::uint32_t label_mask = kAllLabels);

  const Graph& base() const noexcept { return *base_; }
  std::size_t size() const noexcept { return size_; }
  bool contains(VertexId v) const {
    return v < mask_.size() && mask_[v] != 0;
  }
  bool label_allowed(std::uint8_t label) const {
    return ((label_mask_ >> label) & 1u) != 0;
  }
  std::uint32_t label_mask() const noexcept { return label_mask_; }

  template <class F>
  void for_each_neighbor(VertexId v, F&& f) const {
    for (const Arc& arc : base_->arcs(v))
      if (contains(arc.to) && label_allowed(arc.label)) f(arc.to);
  }

  std::vector<VertexId> neighbors(VertexId v) const;
  int degree(VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const;
  std::vector<VertexId> vertices() const;
  std::size_t edge_count() const;
  bool is_connected() const;
  // Vertices reachable from `from` inside the view.
  std::vector<std::uint8_t> reachable_from(VertexId from) const;

  SubgraphView without(std::span<const VertexId> removed) const;
  SubgraphView intersect(const SubgraphView& other) const;
  SubgraphView restrict_labels(std::uint32_t label_mask) const;

 private:
  const Graph* base_;
  std::vector<std::uint8_t> mask_;
  std::uint32_t label_mask_ = kAllLabels;
  std::size_t size_ = 0;
};

}  // namespace cwpath

#endif  // CWPATH_GRAPH_HPP_
