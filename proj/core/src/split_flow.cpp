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

#include "split_flow.hpp"

#include <algorithm>
#include <queue>

namespace cwpath::detail {

SplitFlow::SplitFlow(const SubgraphView& view, const SplitFlowSpec& spec)
    : view_(&view), local_(view.base().vertex_count(), -1) {
  global_ = view.vertices();
  for (std::size_t i = 0; i < global_.size(); ++i)
    local_[global_[i]] = static_cast<int>(i);
  arcs_.resize(2 * global_.size());
  terminal_.assign(global_.size(), 0);
  source_ = add_node();
  sink_ = add_node();

  std::vector<int> through(global_.size(), 1);
  for (const auto& a : spec.through)
    if (view.contains(a.vertex)) through[local_[a.vertex]] = a.capacity;
  std::vector<std::uint8_t> sink_in(global_.size(), 0);
  for (const auto& a : spec.sinks_at_in)
    if (view.contains(a.vertex)) sink_in[local_[a.vertex]] = 1;
  auto mark = [&](const std::vector<Attachment>& list) {
    for (const auto& a : list)
      if (view.contains(a.vertex)) terminal_[local_[a.vertex]] = 1;
  };
  mark(spec.sources_at_out);
  mark(spec.sources_at_in);
  mark(spec.sinks_at_in);
  mark(spec.sinks_at_out);
  for (std::size_t i = 0; i < global_.size(); ++i)
    if (through[i] != 1) terminal_[i] = 1;

  for (const auto& a : spec.sources_at_out)
    if (view.contains(a.vertex)) add_arc(source_, out(a.vertex), a.capacity);
  for (const auto& a : spec.sources_at_in)
    if (view.contains(a.vertex)) add_arc(source_, in(a.vertex), a.capacity);

  auto skipped = [&](VertexId x, VertexId y) {
    for (const auto& [p, q] : spec.skipped_edges)
      if ((p == x && q == y) || (p == y && q == x)) return true;
    return false;
  };
  for (VertexId v : global_) {
    const int lv = local_[v];
    if (through[lv] > 0) add_arc(in(v), out(v), through[lv]);
    view.for_each_neighbor(v, [&](VertexId w) {
      if (skipped(v, w)) return;
      // Into a plain vertex the vertex arc already bounds the flow; keep the
      // edge arc uncapacitated so minimum cuts consist of vertices.
      const int lw = local_[w];
      const bool plain = through[lw] == 1 && !sink_in[lw];
      add_arc(out(v), in(w), plain ? kUnbounded : 1);
    });
  }
  for (const auto& a : spec.sinks_at_in)
    if (view.contains(a.vertex)) add_arc(in(a.vertex), sink_, a.capacity);
  for (const auto& a : spec.sinks_at_out)
    if (view.contains(a.vertex)) add_arc(out(a.vertex), sink_, a.capacity);
}

int SplitFlow::add_node() {
  arcs_.emplace_back();
  return static_cast<int>(arcs_.size()) - 1;
}

void SplitFlow::add_arc(int from, int to, int cap) {
  arcs_[from].push_back(
      Arc{to, cap, static_cast<int>(arcs_[to].size()), cap});
  arcs_[to].push_back(
      Arc{from, 0, static_cast<int>(arcs_[from].size()) - 1, 0});
}

bool SplitFlow::augment() {
  std::vector<std::pair<int, int>> parent(arcs_.size(), {-1, -1});
  std::queue<int> queue;
  queue.push(source_);
  parent[source_] = {source_, -1};
  while (!queue.empty() && parent[sink_].first < 0) {
    const int u = queue.front();
    queue.pop();
    for (int i = 0; i < static_cast<int>(arcs_[u].size()); ++i) {
      const Arc& a = arcs_[u][i];
      if (a.cap > 0 && parent[a.to].first < 0) {
        parent[a.to] = {u, i};
        queue.push(a.to);
      }
    }
  }
  if (parent[sink_].first < 0) return false;
  for (int v = sink_; v != source_;) {
    const auto [u, i] = parent[v];
    Arc& a = arcs_[u][i];
    a.cap -= 1;
    arcs_[v][a.rev].cap += 1;
    v = u;
  }
  ++augmentations_;
  return true;
}

int SplitFlow::run(int limit) {
  while (value_ < limit && augment()) ++value_;
  return value_;
}

std::vector<Path> SplitFlow::decompose() const {
  // Remaining flow on every original arc.
  std::vector<std::vector<int>> flow(arcs_.size());
  for (std::size_t u = 0; u < arcs_.size(); ++u) {
    flow[u].resize(arcs_[u].size(), 0);
    for (std::size_t i = 0; i < arcs_[u].size(); ++i) {
      const Arc& a = arcs_[u][i];
      if (a.original > 0) flow[u][i] = std::max(0, a.original - a.cap);
    }
  }
  std::vector<Path> paths;
  std::vector<int> position(arcs_.size(), -1);
  for (int unit = 0; unit < value_; ++unit) {
    std::vector<int> walk{source_};
    position[source_] = 0;
    int current = source_;
    while (current != sink_) {
      int next = -1;
      for (std::size_t i = 0; i < arcs_[current].size(); ++i) {
        if (flow[current][i] > 0) {
          --flow[current][i];
          next = arcs_[current][i].to;
          break;
        }
      }
      if (next < 0) break;  // conservation makes this unreachable
      if (position[next] >= 0) {
        // Cancel the cycle: its arcs were already decremented.
        while (walk.back() != next) {
          position[walk.back()] = -1;
          walk.pop_back();
        }
      } else {
        position[next] = static_cast<int>(walk.size());
        walk.push_back(next);
      }
      current = next;
    }
    for (int node : walk) position[node] = -1;
    Path path;
    for (int node : walk) {
      if (node == source_ || node == sink_) continue;
      const VertexId v = global_[node / 2];
      if (path.vertices.empty() || path.vertices.back() != v)
        path.vertices.push_back(v);
    }
    if (!path.vertices.empty()) paths.push_back(std::move(path));
  }
  return paths;
}

std::vector<std::uint8_t> SplitFlow::residual_reachable() const {
  std::vector<std::uint8_t> seen(arcs_.size(), 0);
  std::vector<int> stack{source_};
  seen[source_] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (const Arc& a : arcs_[u]) {
      if (a.cap > 0 && !seen[a.to]) {
        seen[a.to] = 1;
        stack.push_back(a.to);
      }
    }
  }
  return seen;
}

std::vector<VertexId> SplitFlow::cut() const {
  const auto reach = residual_reachable();
  std::vector<VertexId> out_set;
  auto add = [&](int node) { out_set.push_back(global_[node / 2]); };
  for (int u = 0; u < static_cast<int>(arcs_.size()); ++u) {
    if (!reach[u]) continue;
    for (const Arc& a : arcs_[u]) {
      if (a.original <= 0 || reach[a.to]) continue;
      if (u == source_) {
        add(a.to);
      } else if (a.to == sink_) {
        add(u);
      } else if (u / 2 == a.to / 2) {
        add(u);  // saturated vertex arc
      } else {
        // Saturated unit edge arc: charge it to a non-terminal endpoint.
        if (!terminal_[u / 2]) {
          add(u);
        } else {
          add(a.to);
        }
      }
    }
  }
  std::sort(out_set.begin(), out_set.end());
  out_set.erase(std::unique(out_set.begin(), out_set.end()), out_set.end());
  return out_set;
}

}  // namespace cwpath::detail
