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


#include "cwpath/lemmas.hpp"

#include <algorithm>
#include <set>

#include "cwpath/error.hpp"
#include "cwpath/menger.hpp"
#include "cwpath/topology.hpp"

namespace cwpath {

bool LemmaReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const LemmaCheck& c) { return c.passed; });
}

namespace {

std::string num(long long v) { return std::to_string(v); }

}  // namespace

LemmaReport run_lemma_suite(int n, const LemmaOptions& options) {
  if (n != 4 && n != 5)
    throw Error(Errc::PreconditionFailed,
                "the lemma suite runs for n = 4 or 5, got " + num(n));
  const CayleyGraph g = CayleyGraph::build(n, Family::Wheel);
  const CayleyGraph bs = CayleyGraph::build(n - 1, Family::BubbleSortStar);
  const std::array<VertexId, 1> fault{0};
  const auto damage = [&](SubgraphView v) {
    return options.inject_fault ? v.without(fault) : v;
  };
  const SubgraphView full = damage(g.full_view());

  LemmaReport report;
  report.n = n;
  const auto add = [&](std::string name, std::string claim,
                       std::string observed, bool passed) {
    report.checks.push_back(
        {std::move(name), std::move(claim), std::move(observed), passed});
  };

  {
    int lo = 1 << 30, hi = 0;
    for (VertexId v : full.vertices()) {
      lo = std::min(lo, full.degree(v));
      hi = std::max(hi, full.degree(v));
    }
    add("wheel-regular", "every vertex has degree " + num(2 * n - 2),
        "degrees in [" + num(lo) + ", " + num(hi) + "]",
        lo == 2 * n - 2 && hi == 2 * n - 2);
  }
  {
    bool ok = true;
    int inside_lo = 1 << 30, inside_hi = 0;
    for (VertexId v : full.vertices()) {
      int inside = 0;
      std::set<int> outside_copies;
      int outside = 0;
      full.for_each_neighbor(v, [&](VertexId w) {
        if (g.copy_of(w) == g.copy_of(v)) {
          ++inside;
        } else {
          ++outside;
          outside_copies.insert(g.copy_of(w).value);
        }
      });
      inside_lo = std::min(inside_lo, inside);
      inside_hi = std::max(inside_hi, inside);
      ok = ok && inside == 2 * n - 5 && outside == 3 &&
           outside_copies.size() == 3;
    }
    add("copy-neighbors",
        num(2 * n - 5) + " neighbors inside the copy, 3 outside in distinct "
                         "copies",
        "inside counts in [" + num(inside_lo) + ", " + num(inside_hi) + "]",
        ok);
  }
  {
    bool ok = true;
    std::string observed;
    for (int i = 1; i <= n; ++i) {
      const std::array<CopyId, 1> one{CopyId{i}};
      const SubgraphView copy = damage(copy_union(g, one));
      const auto members = copy.vertices();
      const bool regular =
          std::all_of(members.begin(), members.end(), [&](VertexId v) {
            return copy.degree(v) == 2 * n - 5;
          });
      const bool good = copy.size() == bs.vertex_count() && regular &&
                        copy.is_connected();
      if (!good) observed += (observed.empty() ? "copy " : ", ") + num(i);
      ok = ok && good;
    }
    add("copy-shape",
        "each copy has " + num(static_cast<long long>(bs.vertex_count())) +
            " vertices, is " + num(2 * n - 5) + "-regular and connected",
        observed.empty() ? "all copies match" : observed + " differ", ok);
  }
  {
    const SubgraphView view = damage(bs.full_view());
    const int kappa = min_pairwise_connectivity(view);
    const int want = 2 * (n - 1) - 3;
    add("bss-connectivity",
        "kappa(BS_" + num(n - 1) + ") = " + num(want) + " over all pairs",
        "min pairwise kappa = " + num(kappa), kappa == want);
  }
  {
    long long expected = 3;
    for (int i = 2; i <= n - 2; ++i) expected *= i;
    long long lo = 1LL << 40, hi = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        long long count = 0;
        for (const auto& [a, b] : cross_edges(g, CopyId{i}, CopyId{j}))
          if (full.contains(a) && full.contains(b)) ++count;
        lo = std::min(lo, count);
        hi = std::max(hi, count);
      }
    add("cross-edge-count",
        "|E_ij| = 3(n-2)! = " + num(expected) + " for every copy pair",
        "counts in [" + num(lo) + ", " + num(hi) + "]",
        lo == expected && hi == expected);
  }
  {
    int pair_max = 0, triple_max = 0;
    std::array<VertexId, 3> witness{};
    for (VertexId u : full.vertices()) {
      std::set<VertexId> second;
      full.for_each_neighbor(u, [&](VertexId x) {
        full.for_each_neighbor(x, [&](VertexId v) {
          if (v > u) second.insert(v);
        });
      });
      for (VertexId v : second) {
        const std::array<VertexId, 2> pair{u, v};
        const auto cn = common_neighbors(full, pair);
        pair_max = std::max(pair_max, static_cast<int>(cn.size()));
        if (static_cast<int>(cn.size()) <= triple_max) continue;
        full.for_each_neighbor(cn.front(), [&](VertexId w) {
          if (w == u || w == v) return;
          const int shared = static_cast<int>(
              std::count_if(cn.begin(), cn.end(), [&](VertexId y) {
                return full.adjacent(w, y);
              }));
          if (shared > triple_max) {
            triple_max = shared;
            witness = {u, v, w};
            std::sort(witness.begin(), witness.end());
          }
        });
      }
    }
    add("pair-common-neighbors", "|CN(u, v)| <= 3 for every pair",
        "max |CN(u, v)| = " + num(pair_max), pair_max <= 3);
    report.r_witness = witness;
    add("triple-common-neighbors",
        "max |CN(u, v, w)| = 3, attained by an explicit triple",
        "max = " + num(triple_max) + " at {" + num(witness[0]) + ", " +
            num(witness[1]) + ", " + num(witness[2]) + "}",
        triple_max == 3);
  }
  {
    int lo = 1 << 30;
    for (int k = 1; k <= n; ++k) {
      const std::array<CopyId, 1> drop{CopyId{k}};
      lo = std::min(lo, vertex_connectivity(damage(delete_copies(g, drop))));
    }
    add("copy-deletion-connectivity",
        "kappa(wheel minus one copy) >= " + num(2 * n - 4) + " for every copy",
        "min kappa = " + num(lo), lo >= 2 * n - 4);
  }
  {
    int lo = 1 << 30;
    int worst_mask = 0;
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<CopyId> copies;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) copies.push_back(CopyId{i + 1});
      const int kappa = vertex_connectivity(damage(copy_union(g, copies)));
      if (kappa < lo) {
        lo = kappa;
        worst_mask = mask;
      }
    }
    std::string worst;
    for (int i = 0; i < n; ++i)
      if (worst_mask >> i & 1) worst += (worst.empty() ? "" : ",") + num(i + 1);
    add("copy-union-connectivity",
        "kappa(union of any copies) >= " + num(2 * n - 5),
        "min kappa = " + num(lo) + " for copies {" + worst + "}",
        lo >= 2 * n - 5);
  }
  return report;
}

}  // namespace cwpath
