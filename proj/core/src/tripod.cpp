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

#include "cwpath/tripod.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>

#include "cwpath/error.hpp"
#include "cwpath/menger.hpp"
#include "cwpath/random.hpp"
#include "split_flow.hpp"

namespace cwpath {

StructureTarget StructureTarget::for_degree(int n) {
  if (n < 4)
    throw Error(Errc::DegreeTooSmall,
                "structure targets need n >= 4, got " + std::to_string(n));
  const int d = n / 2;
  if (n % 2 == 0) return {2 * d - 2, 2 * d - 2, 2 * d - 2, d};
  return {2 * d - 2, 2 * d, 2 * d, d};
}

int StructureTarget::count(Bundle b) const {
  switch (b) {
    case Bundle::AB:
      return x;
    case Bundle::AC:
      return y;
    case Bundle::BC:
      return z;
  }
  return 0;
}

std::vector<Path>& TripodStructure::bundle(Bundle b) {
  return b == Bundle::AB ? bundle_ab : b == Bundle::AC ? bundle_ac : bundle_bc;
}

const std::vector<Path>& TripodStructure::bundle(Bundle b) const {
  return b == Bundle::AB ? bundle_ab : b == Bundle::AC ? bundle_ac : bundle_bc;
}

std::array<int, 3> TripodStructure::counts() const {
  return {static_cast<int>(bundle_ab.size()),
          static_cast<int>(bundle_ac.size()),
          static_cast<int>(bundle_bc.size())};
}

std::string to_string(TripodStrategy s) {
  return s == TripodStrategy::Negotiated ? "negotiated" : "exhaustive";
}

std::string to_string(TripodFailure f) {
  switch (f) {
    case TripodFailure::None:
      return "none";
    case TripodFailure::Budget:
      return "budget";
    case TripodFailure::PairBound:
      return "pair-bound";
    case TripodFailure::Infeasible:
      return "infeasible";
  }
  return "unknown";
}

namespace {

constexpr std::array<const char*, 3> kBundleNames{"ab", "ac", "bc"};

std::string path_tag(int bundle, std::size_t index) {
  return std::string(kBundleNames[bundle]) + "[" + std::to_string(index) + "]";
}

}  // namespace

Verdict verify_tripod(const SubgraphView& view,
                      const TripodStructure& structure,
                      const StructureTarget& target) {
  Verdict verdict;
  const auto& omega = structure.omega;
  for (int i = 0; i < 3; ++i) {
    if (!view.contains(omega[i]))
      verdict.fail("terminal " + std::to_string(omega[i]) +
                   " outside the view");
    for (int j = i + 1; j < 3; ++j)
      if (omega[i] == omega[j])
        verdict.fail("terminals repeat vertex " + std::to_string(omega[i]));
  }
  std::map<VertexId, std::string> internal_owner;
  std::map<std::pair<VertexId, VertexId>, std::string> edge_owner;
  for (int k = 0; k < 3; ++k) {
    const auto& paths = structure.bundle(static_cast<Bundle>(k));
    const int want = target.count(static_cast<Bundle>(k));
    if (static_cast<int>(paths.size()) < want)
      verdict.fail("bundle " + std::string(kBundleNames[k]) + " has " +
                   std::to_string(paths.size()) + " paths, target " +
                   std::to_string(want));
    const VertexId s = omega[kBundleEnds[k][0]];
    const VertexId t = omega[kBundleEnds[k][1]];
    for (std::size_t p = 0; p < paths.size(); ++p) {
      const Path& path = paths[p];
      const std::string tag = path_tag(k, p);
      Verdict single = check_path(view, path);
      for (auto& v : single.violations) verdict.fail(tag + ": " + v);
      if (path.vertices.size() < 2) {
        verdict.fail(tag + " has fewer than two vertices");
        continue;
      }
      if (path.front() != s || path.back() != t)
        verdict.fail(tag + " runs " + std::to_string(path.front()) + " to " +
                     std::to_string(path.back()) + ", expected " +
                     std::to_string(s) + " to " + std::to_string(t));
      for (std::size_t i = 1; i + 1 < path.vertices.size(); ++i) {
        const VertexId v = path.vertices[i];
        if (std::find(omega.begin(), omega.end(), v) != omega.end())
          verdict.fail(tag + " passes through terminal " + std::to_string(v));
        auto [it, fresh] = internal_owner.emplace(v, tag);
        if (!fresh)
          verdict.fail("internal vertex " + std::to_string(v) +
                       " shared by " + it->second + " and " + tag);
      }
      for (std::size_t i = 1; i < path.vertices.size(); ++i) {
        auto e = std::minmax(path.vertices[i - 1], path.vertices[i]);
        auto [it, fresh] = edge_owner.emplace(e, tag);
        if (!fresh)
          verdict.fail("edge " + std::to_string(e.first) + "-" +
                       std::to_string(e.second) + " used by " + it->second +
                       " and " + tag);
      }
    }
  }
  return verdict;
}

namespace {

void check_instance(const SubgraphView& view,
                    const std::array<VertexId, 3>& omega,
                    const StructureTarget& target) {
  for (int i = 0; i < 3; ++i) {
    if (!view.contains(omega[i]))
      throw Error(Errc::VertexNotInView,
                  "terminal " + std::to_string(omega[i]) + " not in the view");
    for (int j = i + 1; j < 3; ++j)
      if (omega[i] == omega[j])
        throw Error(Errc::DuplicateVertex,
                    "terminals repeat vertex " + std::to_string(omega[i]));
  }
  if (target.x < 0 || target.y < 0 || target.z < 0)
    throw Error(Errc::PreconditionFailed, "negative bundle count");
}

// Min-cost flow of unit vertex capacity for one commodity, on the split
// network of a view with fixed local numbering. Vertex costs change between
// calls; the topology does not.
class CommodityNetwork {
 public:
  CommodityNetwork(const std::vector<std::vector<int>>& adjacency, int s,
                   int t, int excluded)
      : n_(static_cast<int>(adjacency.size())), s_(s), t_(t) {
    head_.assign(2 * n_, -1);
    through_.assign(n_, -1);
    for (int v = 0; v < n_; ++v) {
      if (v == s || v == t || v == excluded) continue;
      through_[v] = add(2 * v, 2 * v + 1);
    }
    for (int u = 0; u < n_; ++u) {
      if (u == excluded || u == t) continue;
      for (int w : adjacency[u]) {
        if (w == excluded || w == s) continue;
        add(2 * u + 1, 2 * w);
      }
    }
  }

  // Routes `count` units from s to t; returns false when fewer fit.
  bool route(int count, const std::vector<double>& vertex_cost,
             std::uint64_t& augmentations) {
    for (std::size_t e = 0; e < cap_.size(); ++e) cap_[e] = (e % 2 == 0);
    for (int v = 0; v < n_; ++v)
      if (through_[v] >= 0) {
        cost_[through_[v]] = vertex_cost[v];
        cost_[through_[v] ^ 1] = -vertex_cost[v];
      }
    const int source = 2 * s_ + 1;
    const int sink = 2 * t_;
    const int nodes = 2 * n_;
    std::vector<double> dist(nodes);
    std::vector<int> via(nodes);
    std::vector<char> queued(nodes);
    for (int unit = 0; unit < count; ++unit) {
      std::fill(dist.begin(), dist.end(),
                std::numeric_limits<double>::infinity());
      std::fill(via.begin(), via.end(), -1);
      std::deque<int> queue{source};
      dist[source] = 0;
      queued.assign(nodes, 0);
      queued[source] = 1;
      while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        queued[u] = 0;
        for (int e = head_[u]; e >= 0; e = next_[e]) {
          if (!cap_[e]) continue;
          const int w = to_[e];
          const double nd = dist[u] + cost_[e];
          if (nd < dist[w] - 1e-12) {
            dist[w] = nd;
            via[w] = e;
            if (!queued[w]) {
              queued[w] = 1;
              queue.push_back(w);
            }
          }
        }
      }
      if (via[sink] < 0) return false;
      for (int v = sink; v != source; v = to_[via[v] ^ 1]) {
        cap_[via[v]] = 0;
        cap_[via[v] ^ 1] = 1;
      }
      ++augmentations;
    }
    return true;
  }

  // Paths of the current flow in local indices.
  std::vector<std::vector<int>> paths() const {
    std::vector<char> used(cap_.size(), 0);
    std::vector<std::vector<int>> out;
    const int source = 2 * s_ + 1;
    for (int e0 = head_[source]; e0 >= 0; e0 = next_[e0]) {
      if (e0 % 2 != 0 || cap_[e0]) continue;
      std::vector<int> path{s_};
      int e = e0;
      std::vector<char> seen(n_, 0);
      seen[s_] = 1;
      bool ok = true;
      while (true) {
        used[e] = 1;
        const int v = to_[e] / 2;
        if (seen[v]) {
          ok = false;
          break;
        }
        seen[v] = 1;
        path.push_back(v);
        if (v == t_) break;
        // Leave v along its through arc and then a used edge arc.
        int next = -1;
        for (int f = head_[2 * v + 1]; f >= 0; f = next_[f])
          if (f % 2 == 0 && !cap_[f] && !used[f]) {
            next = f;
            break;
          }
        if (next < 0) {
          ok = false;
          break;
        }
        e = next;
      }
      if (ok) out.push_back(std::move(path));
    }
    return out;
  }

 private:
  int add(int from, int to) {
    const int e = static_cast<int>(to_.size());
    to_.push_back(to);
    next_.push_back(head_[from]);
    head_[from] = e;
    to_.push_back(from);
    next_.push_back(head_[to]);
    head_[to] = e + 1;
    cap_.push_back(1);
    cap_.push_back(0);
    cost_.push_back(0);
    cost_.push_back(0);
    return e;
  }

  int n_;
  int s_;
  int t_;
  std::vector<int> head_;
  std::vector<int> next_;
  std::vector<int> to_;
  std::vector<char> cap_;
  std::vector<double> cost_;
  std::vector<int> through_;
};

struct LocalGraph {
  std::vector<VertexId> global;
  std::vector<int> local;
  std::vector<std::vector<int>> adjacency;
};

LocalGraph localize(const SubgraphView& view) {
  LocalGraph g;
  g.global = view.vertices();
  g.local.assign(view.base().vertex_count(), -1);
  for (std::size_t i = 0; i < g.global.size(); ++i)
    g.local[g.global[i]] = static_cast<int>(i);
  g.adjacency.resize(g.global.size());
  for (std::size_t i = 0; i < g.global.size(); ++i)
    view.for_each_neighbor(g.global[i], [&](VertexId w) {
      g.adjacency[i].push_back(g.local[w]);
    });
  return g;
}

constexpr int kRoundsPerRestart = 48;

}  // namespace

TripodOutcome solve_tripod(const SubgraphView& view,
                           const std::array<VertexId, 3>& omega,
                           const StructureTarget& target,
                           const TripodBudget& budget) {
  check_instance(view, omega, target);
  TripodOutcome outcome;
  const std::array<int, 3> demand{target.x, target.y, target.z};

  // A commodity that does not fit on its own rules the target out.
  for (int k = 0; k < 3; ++k) {
    if (demand[k] == 0) continue;
    const VertexId s = omega[kBundleEnds[k][0]];
    const VertexId t = omega[kBundleEnds[k][1]];
    const VertexId third = omega[3 - kBundleEnds[k][0] - kBundleEnds[k][1]];
    const std::array<VertexId, 1> drop{third};
    const int kappa =
        local_connectivity(view.without(drop), s, t, demand[k]);
    if (kappa < demand[k]) {
      outcome.failure = TripodFailure::PairBound;
      outcome.diagnostic = "only " + std::to_string(kappa) + " " +
                           kBundleNames[k] + "-paths avoid the third terminal";
      return outcome;
    }
  }

  const LocalGraph g = localize(view);
  const int n = static_cast<int>(g.global.size());
  std::array<int, 3> term{};
  for (int i = 0; i < 3; ++i) term[i] = g.local[omega[i]];
  std::vector<CommodityNetwork> nets;
  for (int k = 0; k < 3; ++k)
    nets.emplace_back(g.adjacency, term[kBundleEnds[k][0]],
                      term[kBundleEnds[k][1]],
                      term[3 - kBundleEnds[k][0] - kBundleEnds[k][1]]);

  for (int restart = 0; restart < budget.restarts; ++restart) {
    outcome.stats.restarts_used = restart + 1;
    Rng rng(derive_seed(budget.seed, static_cast<std::uint64_t>(restart)));
    std::vector<double> base(n);
    for (double& b : base) b = 1.0 + 0.5 * rng.uniform();
    std::vector<double> history(n, 0.0);
    std::array<std::vector<std::vector<int>>, 3> routes;
    std::vector<int> usage(n, 0);
    auto occupy = [&](int k, int delta) {
      for (const auto& p : routes[k])
        for (std::size_t i = 1; i + 1 < p.size(); ++i) usage[p[i]] += delta;
    };
    double pressure = 0.5;
    std::vector<double> cost(n);
    for (int round = 0; round < kRoundsPerRestart; ++round) {
      ++outcome.stats.rounds;
      std::array<int, 3> order{0, 1, 2};
      for (int i = 2; i > 0; --i)
        std::swap(order[i], order[rng.below(static_cast<std::uint64_t>(i) + 1)]);
      for (int k : order) {
        occupy(k, -1);
        for (int v = 0; v < n; ++v)
          cost[v] = (base[v] + history[v]) * (1.0 + pressure * usage[v]);
        if (demand[k] > 0 &&
            !nets[k].route(demand[k], cost, outcome.stats.augmentations)) {
          outcome.failure = TripodFailure::PairBound;
          outcome.diagnostic = "commodity " + std::string(kBundleNames[k]) +
                               " does not fit";
          return outcome;
        }
        routes[k] = demand[k] > 0 ? nets[k].paths()
                                  : std::vector<std::vector<int>>{};
        occupy(k, +1);
      }
      bool clean = true;
      for (int v = 0; v < n; ++v)
        if (usage[v] > 1) {
          clean = false;
          history[v] += 0.3 * (usage[v] - 1);
        }
      if (clean) {
        TripodStructure s;
        s.omega = omega;
        for (int k = 0; k < 3; ++k)
          for (const auto& p : routes[k]) {
            Path path;
            for (int v : p) path.vertices.push_back(g.global[v]);
            s.bundle(static_cast<Bundle>(k)).push_back(std::move(path));
          }
        if (verify_tripod(view, s, target).ok()) {
          outcome.structure = std::move(s);
          outcome.failure = TripodFailure::None;
          outcome.strategy = TripodStrategy::Negotiated;
          return outcome;
        }
        clean = false;
      }
      pressure *= 1.6;
      if (outcome.stats.augmentations >= budget.max_augmentations) break;
    }
    if (outcome.stats.augmentations >= budget.max_augmentations) break;
  }

  if (budget.allow_exhaustive && view.size() <= kExhaustiveLimit) {
    TripodOutcome exact = solve_tripod_exhaustive(view, omega, target);
    exact.stats.augmentations += outcome.stats.augmentations;
    exact.stats.restarts_used = outcome.stats.restarts_used;
    exact.stats.rounds = outcome.stats.rounds;
    return exact;
  }
  outcome.failure = TripodFailure::Budget;
  outcome.diagnostic = "no structure after " +
                       std::to_string(outcome.stats.restarts_used) +
                       " restarts and " +
                       std::to_string(outcome.stats.augmentations) +
                       " augmentations";
  return outcome;
}

int omega_path_upper_bound(const SubgraphView& view,
                           const std::array<VertexId, 3>& omega) {
  check_instance(view, omega, StructureTarget{});
  int slots = 0;
  for (VertexId w : view.vertices()) {
    if (std::find(omega.begin(), omega.end(), w) != omega.end()) continue;
    int hits = 0;
    for (VertexId t : omega) hits += view.adjacent(w, t) ? 1 : 0;
    slots += std::min(2, hits);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (view.adjacent(omega[i], omega[j])) slots += 2;
  int bound = slots / 4;
  for (VertexId t : omega) bound = std::min(bound, view.degree(t));
  // Every omega-path contains a (u,v)-path, possibly through the third
  // terminal, which may therefore be shared.
  for (int k = 0; k < 3; ++k) {
    const VertexId u = omega[kBundleEnds[k][0]];
    const VertexId v = omega[kBundleEnds[k][1]];
    const VertexId w = omega[3 - kBundleEnds[k][0] - kBundleEnds[k][1]];
    detail::SplitFlowSpec spec;
    spec.sources_at_out.push_back({u, detail::kUnbounded});
    spec.sinks_at_in.push_back({v, detail::kUnbounded});
    spec.through = {{u, 0}, {v, 0}, {w, detail::kUnbounded}};
    detail::SplitFlow flow(view, spec);
    bound = std::min(bound, flow.run(bound));
  }
  return bound;
}

ExactPi exact_pi(const SubgraphView& view,
                 const std::array<VertexId, 3>& omega) {
  if (view.size() > kExhaustiveLimit)
    throw Error(Errc::OracleScaleExceeded,
                "exact oracle is limited to " +
                    std::to_string(kExhaustiveLimit) + " vertices, view has " +
                    std::to_string(view.size()));
  ExactPi result;
  result.upper_bound = omega_path_upper_bound(view, omega);
  result.witness.omega = omega;
  TripodBudget quick;
  quick.restarts = 4;
  quick.allow_exhaustive = false;
  for (int t = 1; t <= result.upper_bound; ++t) {
    std::set<std::array<int, 3>> seen;
    std::optional<TripodStructure> found;
    for (int ma = t; ma >= 0 && !found; --ma)
      for (int mb = t - ma; mb >= 0 && !found; --mb) {
        const int mc = t - ma - mb;
        const std::array<int, 3> counts{ma + mb, ma + mc, mb + mc};
        if (!seen.insert(counts).second) continue;
        const StructureTarget target{counts[0], counts[1], counts[2], 0};
        TripodOutcome fast = solve_tripod(view, omega, target, quick);
        if (fast.ok()) {
          found = std::move(fast.structure);
          break;
        }
        if (fast.failure == TripodFailure::PairBound) continue;
        TripodOutcome exact = solve_tripod_exhaustive(view, omega, target);
        if (exact.ok()) found = std::move(exact.structure);
      }
    if (!found) return result;
    result.value = t;
    result.witness = std::move(*found);
  }
  return result;
}

}  // namespace cwpath
