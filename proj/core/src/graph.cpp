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

#include "cwpath/graph.hpp"

#include <algorithm>
#include <numeric>

#include "cwpath/error.hpp"

namespace cwpath {

Graph Graph::from_edges(std::size_t vertex_count,
                        std::span<const std::pair<VertexId, VertexId>> edges) {
  Graph g(vertex_count);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(VertexId u, VertexId v, std::uint8_t label) {
  if (u == v) throw Error(Errc::PreconditionFailed, "loops are not allowed");
  if (u >= vertex_count() || v >= vertex_count())
    throw Error(Errc::PreconditionFailed, "edge endpoint out of range");
  if (adjacent(u, v)) return;
  auto insert = [](std::vector<Arc>& list, Arc arc) {
    auto it = std::lower_bound(
        list.begin(), list.end(), arc.to,
        [](const Arc& a, VertexId target) { return a.to < target; });
    list.insert(it, arc);
  };
  insert(adjacency_[u], Arc{v, label});
  insert(adjacency_[v], Arc{u, label});
  ++edge_count_;
}

bool Graph::adjacent(VertexId u, VertexId v) const { return label(u, v) >= 0; }

int Graph::label(VertexId u, VertexId v) const {
  const auto& list = adjacency_[u];
  auto it = std::lower_bound(
      list.begin(), list.end(), v,
      [](const Arc& a, VertexId target) { return a.to < target; });
  if (it == list.end() || it->to != v) return -1;
  return it->label;
}

SubgraphView::SubgraphView(const Graph& base)
    : base_(&base),
      mask_(base.vertex_count(), 1),
      size_(base.vertex_count()) {}

SubgraphView::SubgraphView(const Graph& base, std::vector<std::uint8_t> mask,
                           std::uint32_t label_mask)
    : base_(&base), mask_(std::move(mask)), label_mask_(label_mask) {
  mask_.resize(base.vertex_count(), 0);
  size_ = static_cast<std::size_t>(
      std::count_if(mask_.begin(), mask_.end(), [](auto m) { return m != 0; }));
}

std::vector<VertexId> SubgraphView::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for_each_neighbor(v, [&](VertexId w) { out.push_back(w); });
  return out;
}

int SubgraphView::degree(VertexId v) const {
  int d = 0;
  for_each_neighbor(v, [&](VertexId) { ++d; });
  return d;
}

bool SubgraphView::adjacent(VertexId u, VertexId v) const {
  if (!contains(u) || !contains(v)) return false;
  const int l = base_->label(u, v);
  return l >= 0 && label_allowed(static_cast<std::uint8_t>(l));
}

std::vector<VertexId> SubgraphView::vertices() const {
  std::vector<VertexId> out;
  out.reserve(size_);
  for (VertexId v = 0; v < mask_.size(); ++v)
    if (mask_[v]) out.push_back(v);
  return out;
}

std::size_t SubgraphView::edge_count() const {
  std::size_t twice = 0;
  for (VertexId v = 0; v < mask_.size(); ++v)
    if (mask_[v]) twice += static_cast<std::size_t>(degree(v));
  return twice / 2;
}

std::vector<std::uint8_t> SubgraphView::reachable_from(VertexId from) const {
  std::vector<std::uint8_t> seen(mask_.size(), 0);
  if (!contains(from)) return seen;
  std::vector<VertexId> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for_each_neighbor(v, [&](VertexId w) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    });
  }
  return seen;
}

bool SubgraphView::is_connected() const {
  if (size_ == 0) return true;
  VertexId first = 0;
  while (!mask_[first]) ++first;
  const auto seen = reachable_from(first);
  return static_cast<std::size_t>(std::count_if(
             seen.begin(), seen.end(), [](auto s) { return s != 0; })) ==
         size_;
}

SubgraphView SubgraphView::without(std::span<const VertexId> removed) const {
  auto mask = mask_;
  for (VertexId v : removed)
    if (v < mask.size()) mask[v] = 0;
  return SubgraphView(*base_, std::move(mask), label_mask_);
}

SubgraphView SubgraphView::intersect(const SubgraphView& other) const {
  if (base_ != &other.base())
    throw Error(Errc::PreconditionFailed, "views over different graphs");
  auto mask = mask_;
  for (VertexId v = 0; v < mask.size(); ++v)
    mask[v] = static_cast<std::uint8_t>(mask[v] && other.contains(v));
  return SubgraphView(*base_, std::move(mask),
                      label_mask_ & other.label_mask());
}

SubgraphView SubgraphView::restrict_labels(std::uint32_t label_mask) const {
  return SubgraphView(*base_, mask_, label_mask_ & label_mask);
}

}  // namespace cwpath
