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

#include <bit>
#include <unordered_set>

#include "cwpath/error.hpp"
#include "cwpath/tripod.hpp"

namespace cwpath {
namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

struct StateKey {
  Mask free;
  std::uint32_t rest;
  bool operator==(const StateKey&) const = default;
};

struct StateHash {
  std::size_t operator()(const StateKey& k) const {
    std::uint64_t h = k.free * 0x9E3779B97F4A7C15ull;
    h ^= (static_cast<std::uint64_t>(k.rest) + 0x632BE59BD9B4E019ull) +
         (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

// Tiny unit-capacity max flow on the split graph of at most 40 vertices.
class SmallFlow {
 public:
  void reset(int nodes) {
    head_.assign(nodes, -1);
    to_.clear();
    next_.clear();
    cap_.clear();
  }
  void add(int from, int to, int cap) {
    to_.push_back(to);
    cap_.push_back(cap);
    next_.push_back(head_[from]);
    head_[from] = static_cast<int>(to_.size()) - 1;
    to_.push_back(from);
    cap_.push_back(0);
    next_.push_back(head_[to]);
    head_[to] = static_cast<int>(to_.size()) - 1;
  }
  int run(int source, int sink, int limit) {
    int value = 0;
    std::vector<int> via(head_.size());
    std::vector<int> queue(head_.size());
    while (value < limit) {
      std::fill(via.begin(), via.end(), -1);
      via[source] = -2;
      std::size_t qh = 0, qt = 0;
      queue[qt++] = source;
      while (qh < qt && via[sink] == -1) {
        const int u = queue[qh++];
        for (int e = head_[u]; e >= 0; e = next_[e])
          if (cap_[e] > 0 && via[to_[e]] == -1) {
            via[to_[e]] = e;
            queue[qt++] = to_[e];
          }
      }
      if (via[sink] == -1) break;
      for (int v = sink; v != source; v = to_[via[v] ^ 1]) {
        --cap_[via[v]];
        ++cap_[via[v] ^ 1];
      }
      ++value;
    }
    return value;
  }

 private:
  std::vector<int> head_, to_, next_, cap_;
};

class Search {
 public:
  Search(const SubgraphView& view, const std::array<VertexId, 3>& omega)
      : global_(view.vertices()) {
    n_ = static_cast<int>(global_.size());
    std::vector<int> local(view.base().vertex_count(), -1);
    for (int i = 0; i < n_; ++i) local[global_[i]] = i;
    adj_.assign(n_, 0);
    for (int i = 0; i < n_; ++i)
      view.for_each_neighbor(global_[i],
                             [&](VertexId w) { adj_[i] |= bit(local[w]); });
    for (int i = 0; i < 3; ++i) term_[i] = local[omega[i]];
    for (int k = 0; k < 3; ++k) {
      s_[k] = term_[kBundleEnds[k][0]];
      t_[k] = term_[kBundleEnds[k][1]];
      direct_[k] = (adj_[s_[k]] & bit(t_[k])) != 0;
    }
    terminals_ = bit(term_[0]) | bit(term_[1]) | bit(term_[2]);
  }

  bool run(const std::array<int, 3>& demand) {
    const Mask all = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
    return solve(all & ~terminals_, demand, 0, -1);
  }

  const std::array<std::vector<std::vector<int>>, 3>& routes() const {
    return routes_;
  }
  const std::vector<VertexId>& global() const { return global_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  // Paths are routed bundle by bundle; inside a bundle, in ascending order
  // of their second vertex. Only paths without chords (apart from the
  // terminal-terminal one) are tried: shortcutting a chord keeps a solution
  // valid, so some solution consists of such paths.
  bool solve(Mask free, std::array<int, 3> rem, int used_direct,
             int last_key) {
    ++nodes_;
    int k = 0;
    while (k < 3 && rem[k] == 0) ++k;
    if (k == 3) return true;
    if (!bounded(free, rem, used_direct)) return false;
    const StateKey key{free, static_cast<std::uint32_t>(
                                 rem[0] | rem[1] << 6 | rem[2] << 12 |
                                 used_direct << 18 | (last_key + 1) << 21)};
    if (failed_.count(key)) return false;

    const int s = s_[k];
    const int t = t_[k];
    std::vector<int> path{s};
    bool ok = false;
    if (direct_[k] && !(used_direct & (1 << k)) && t > last_key) {
      path.push_back(t);
      ok = finish(k, path, free, rem, used_direct | (1 << k), t);
      path.pop_back();
    }
    for (Mask m = adj_[s] & free; m && !ok; m &= m - 1) {
      const int w = std::countr_zero(m);
      if (w <= last_key) continue;
      ok = extend(k, w, bit(w), path, free, rem, used_direct);
    }
    if (!ok && failed_.size() < kMemoLimit) failed_.insert(key);
    return ok;
  }

  bool extend(int k, int v, Mask inner, std::vector<int>& path, Mask free,
              const std::array<int, 3>& rem, int used_direct) {
    ++nodes_;
    const int s = s_[k];
    const int t = t_[k];
    if (!reaches(v, t, free & ~inner)) return false;
    path.push_back(v);
    bool ok = false;
    if (adj_[v] & bit(t)) {
      path.push_back(t);
      ok = finish(k, path, free & ~inner, rem, used_direct, path[1]);
      path.pop_back();
    } else {
      const Mask before = inner & ~bit(v);
      for (Mask m = adj_[v] & free & ~inner & ~adj_[s]; m && !ok; m &= m - 1) {
        const int w = std::countr_zero(m);
        if (adj_[w] & before) continue;
        ok = extend(k, w, inner | bit(w), path, free, rem, used_direct);
      }
    }
    path.pop_back();
    return ok;
  }

  bool finish(int k, const std::vector<int>& path, Mask free,
              std::array<int, 3> rem, int used_direct, int key) {
    --rem[k];
    routes_[k].push_back(path);
    const bool ok = solve(free, rem, used_direct, rem[k] > 0 ? key : -1);
    if (!ok) routes_[k].pop_back();
    return ok;
  }

  // Can v reach t through vertices of `avail`?
  bool reaches(int v, int t, Mask avail) const {
    Mask seen = bit(v);
    Mask frontier = bit(v);
    while (frontier) {
      Mask next = 0;
      for (Mask m = frontier; m; m &= m - 1) next |= adj_[std::countr_zero(m)];
      if (next & bit(t)) return true;
      next &= avail & ~seen;
      seen |= next;
      frontier = next;
    }
    return false;
  }

  bool bounded(Mask free, const std::array<int, 3>& rem, int used_direct) {
    // Edge-ends at terminals: two per remaining path.
    Mask hungry = 0;
    int total = 0;
    for (int k = 0; k < 3; ++k)
      if (rem[k] > 0) {
        hungry |= bit(s_[k]) | bit(t_[k]);
        total += rem[k];
      }
    int slots = 0;
    for (Mask m = free; m; m &= m - 1)
      slots += std::min(2, std::popcount(adj_[std::countr_zero(m)] & hungry));
    for (int k = 0; k < 3; ++k)
      if (rem[k] > 0 && direct_[k] && !(used_direct & (1 << k))) slots += 2;
    if (slots < 2 * total) return false;

    for (int k = 0; k < 3; ++k) {
      if (rem[k] == 0) continue;
      const std::array<std::pair<int, int>, 1> sinks{{{t_[k], rem[k]}}};
      if (flow(free, s_[k], sinks, used_direct) < rem[k]) return false;
    }
    for (int i = 0; i < 3; ++i) {
      std::array<std::pair<int, int>, 2> sinks{};
      int want = 0;
      int m = 0;
      for (int k = 0; k < 3; ++k) {
        if (kBundleEnds[k][0] != i && kBundleEnds[k][1] != i) continue;
        const int other = term_[kBundleEnds[k][0] == i ? kBundleEnds[k][1]
                                                       : kBundleEnds[k][0]];
        sinks[m++] = {other, rem[k]};
        want += rem[k];
      }
      if (want > 0 && flow(free, term_[i], sinks, used_direct) < want)
        return false;
    }
    return true;
  }

  template <std::size_t N>
  int flow(Mask free, int source,
           const std::array<std::pair<int, int>, N>& sinks, int used_direct) {
    const int src = 2 * n_;
    const int snk = 2 * n_ + 1;
    net_.reset(2 * n_ + 2);
    Mask sink_mask = 0;
    int want = 0;
    for (const auto& [v, cap] : sinks) {
      if (cap == 0) continue;
      sink_mask |= bit(v);
      net_.add(2 * v, snk, cap);
      want += cap;
    }
    net_.add(src, 2 * source + 1, want);
    for (Mask m = free; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      net_.add(2 * v, 2 * v + 1, 1);
      for (Mask r = adj_[v] & (free | sink_mask); r; r &= r - 1)
        net_.add(2 * v + 1, 2 * std::countr_zero(r), 1);
    }
    for (Mask r = adj_[source] & (free | sink_mask); r; r &= r - 1) {
      const int w = std::countr_zero(r);
      if (sink_mask & bit(w)) {
        int k = 0;
        while (!((s_[k] == source && t_[k] == w) ||
                 (t_[k] == source && s_[k] == w)))
          ++k;
        if (used_direct & (1 << k)) continue;
      }
      net_.add(2 * source + 1, 2 * w, 1);
    }
    return net_.run(src, snk, want);
  }

  static constexpr std::size_t kMemoLimit = 4'000'000;

  std::vector<VertexId> global_;
  int n_ = 0;
  std::vector<Mask> adj_;
  std::array<int, 3> term_{};
  std::array<int, 3> s_{};
  std::array<int, 3> t_{};
  std::array<bool, 3> direct_{};
  Mask terminals_ = 0;
  std::unordered_set<StateKey, StateHash> failed_;
  std::array<std::vector<std::vector<int>>, 3> routes_;
  std::uint64_t nodes_ = 0;
  SmallFlow net_;
};

}  // namespace

TripodOutcome solve_tripod_exhaustive(const SubgraphView& view,
                                      const std::array<VertexId, 3>& omega,
                                      const StructureTarget& target) {
  if (view.size() > kExhaustiveLimit)
    throw Error(Errc::OracleScaleExceeded,
                "exhaustive search is limited to " +
                    std::to_string(kExhaustiveLimit) + " vertices, view has " +
                    std::to_string(view.size()));
  for (int i = 0; i < 3; ++i) {
    if (!view.contains(omega[i]))
      throw Error(Errc::VertexNotInView,
                  "terminal " + std::to_string(omega[i]) + " not in the view");
    for (int j = i + 1; j < 3; ++j)
      if (omega[i] == omega[j])
        throw Error(Errc::DuplicateVertex,
                    "terminals repeat vertex " + std::to_string(omega[i]));
  }
  if (target.x < 0 || target.y < 0 || target.z < 0 || target.x > 63 ||
      target.y > 63 || target.z > 63)
    throw Error(Errc::PreconditionFailed, "bundle count out of range");

  TripodOutcome outcome;
  outcome.strategy = TripodStrategy::Exhaustive;
  Search search(view, omega);
  const bool found = search.run({target.x, target.y, target.z});
  outcome.stats.search_nodes = search.nodes();
  if (!found) {
    outcome.failure = TripodFailure::Infeasible;
    outcome.diagnostic = "exhaustive search found no structure";
    return outcome;
  }
  TripodStructure s;
  s.omega = omega;
  for (int k = 0; k < 3; ++k)
    for (const auto& p : search.routes()[k]) {
      Path path;
      for (int v : p) path.vertices.push_back(search.global()[v]);
      s.bundle(static_cast<Bundle>(k)).push_back(std::move(path));
    }
  if (!verify_tripod(view, s, target).ok()) {
    outcome.failure = TripodFailure::Infeasible;
    outcome.diagnostic = "exhaustive search produced an invalid structure";
    return outcome;
  }
  outcome.structure = std::move(s);
  return outcome;
}

}  // namespace cwpath
