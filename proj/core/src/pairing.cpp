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


#include "cwpath/pairing.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <thread>

#include "cwpath/error.hpp"
#include "cwpath/random.hpp"

namespace cwpath {

int pairing_capacity(int x, int y, int z) {
  if (x < 0 || y < 0 || z < 0)
    throw Error(Errc::PreconditionFailed, "pairing counts must be >= 0");
  return std::min({(x + y + z) / 2, x + y, y + z, z + x});
}

PairSplit pairing_split(int x, int y, int z) {
  const int total = pairing_capacity(x, y, z);
  for (int ma = 0; ma <= total; ++ma)
    for (int mb = 0; ma + mb <= total; ++mb) {
      const int mc = total - ma - mb;
      if (ma + mb <= x && ma + mc <= y && mb + mc <= z) return {ma, mb, mc};
    }
  return {};  // unreachable: the capacity is always attained
}

Verdict verify_omega_paths(const SubgraphView& view, const OmegaPathSet& set) {
  PathFamily family{set.paths, Disjointness::PairwiseInternallyDisjoint};
  Verdict verdict = verify_path_family(view, family, set.omega);
  for (std::size_t i = 0; i < set.paths.size(); ++i) {
    const auto& vs = set.paths[i].vertices;
    for (VertexId t : set.omega)
      if (std::find(vs.begin(), vs.end(), t) == vs.end())
        verdict.fail("omega-path " + std::to_string(i) + " misses terminal " +
                     std::to_string(t));
  }
  return verdict;
}

namespace {

Path join(const Path& first, const Path& second) {
  Path out = first;
  out.vertices.insert(out.vertices.end(), second.vertices.begin() + 1,
                      second.vertices.end());
  return out;
}

}  // namespace

OmegaPathSet pair_structure(const SubgraphView& view,
                            const TripodStructure& structure) {
  const auto counts = structure.counts();
  const Verdict v = verify_tripod(view, structure,
                                  {counts[0], counts[1], counts[2], 0});
  if (!v.ok())
    throw Error(Errc::UnverifiedStructure,
                "structure rejected: " + v.violations.front());
  const PairSplit split = pairing_split(counts[0], counts[1], counts[2]);
  const auto& ab = structure.bundle_ab;
  const auto& ac = structure.bundle_ac;
  const auto& bc = structure.bundle_bc;
  OmegaPathSet out;
  out.omega = structure.omega;
  std::size_t iab = 0, iac = 0, ibc = 0;
  for (int k = 0; k < split.m_a; ++k)  // b .. a .. c
    out.paths.push_back(join(ab[iab++].reversed(), ac[iac++]));
  for (int k = 0; k < split.m_b; ++k)  // a .. b .. c
    out.paths.push_back(join(ab[iab++], bc[ibc++]));
  for (int k = 0; k < split.m_c; ++k)  // a .. c .. b
    out.paths.push_back(join(ac[iac++], bc[ibc++].reversed()));
  return out;
}

std::vector<std::array<VertexId, 3>> sample_triples(const CayleyGraph& g,
                                                    const SampleSpec& spec) {
  std::vector<std::array<VertexId, 3>> out;
  const VertexId count = g.vertex_count();
  if (spec.mode == SampleMode::Exhaustive) {
    for (VertexId a = 0; a < count; ++a)
      for (VertexId b = a + 1; b < count; ++b)
        for (VertexId c = b + 1; c < count; ++c) out.push_back({a, b, c});
    return out;
  }
  const int n = g.n();
  Rng rng(spec.seed);
  std::set<std::array<VertexId, 3>> seen;
  const auto member = [&](int copy) {
    const auto m = g.copy_members(CopyId{copy});
    return m[rng.below(m.size())];
  };
  const auto copy = [&] { return 1 + static_cast<int>(rng.below(n)); };
  for (int stratum = 0; stratum < 3; ++stratum) {
    const int want = spec.count / 3 + (stratum < spec.count % 3 ? 1 : 0);
    int got = 0;
    for (long attempt = 0; got < want && attempt < 100L * want + 100;
         ++attempt) {
      std::array<VertexId, 3> t{};
      const int c1 = copy();
      int c2 = copy(), c3 = copy();
      if (stratum == 0) {
        c2 = c3 = c1;
      } else if (stratum == 1) {
        while (c2 == c1) c2 = copy();
        c3 = c1;
      } else {
        while (c2 == c1) c2 = copy();
        while (c3 == c1 || c3 == c2) c3 = copy();
      }
      t = {member(c1), member(c2), member(c3)};
      if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) continue;
      // Position of the odd terminal out varies.
      const auto shift = rng.below(3);
      std::rotate(t.begin(), t.begin() + shift, t.end());
      auto key = t;
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second) continue;
      out.push_back(t);
      ++got;
    }
  }
  return out;
}

Pi3Lower pi3_lower(const CayleyGraph& g, const SampleSpec& spec) {
  if (g.family() != Family::Wheel)
    throw Error(Errc::WrongFamily, "pi3_lower expects the wheel family");
  const auto triples = sample_triples(g, spec);
  const SubgraphView full = g.full_view();
  struct Result {
    int paths = 0;
    CaseId id = CaseId::Even;
  };
  std::vector<Result> results(triples.size());
  std::vector<std::exception_ptr> errors(triples.size());
  const auto options_for = [&](std::size_t i) {
    ConstructOptions o = spec.construct;
    o.budget.seed = derive_seed(spec.seed, i);
    return o;
  };
  const auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < triples.size(); i += stride) {
      try {
        const Construction c = build_structure(g, triples[i], options_for(i));
        results[i] = {static_cast<int>(pair_structure(full, c.structure)
                                           .paths.size()),
                      c.trace.case_id};
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t jobs = static_cast<std::size_t>(std::max(1, spec.jobs));
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  Pi3Lower out;
  out.evaluated = triples.size();
  out.exhaustive = spec.mode == SampleMode::Exhaustive;
  if (triples.empty()) return out;
  std::size_t best = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    ++out.cases[results[i].id];
    if (results[i].paths < results[best].paths) best = i;
  }
  out.value = results[best].paths;
  out.witness_seed = options_for(best).budget.seed;
  out.witness = build_structure(g, triples[best], options_for(best));
  out.witness_paths = pair_structure(full, out.witness.structure);
  return out;
}

Pi3Upper pi3_upper(const CayleyGraph& g) {
  const SubgraphView full = g.full_view();
  Pi3Upper out;
  out.k = full.degree(0);
  out.r = -1;
  const VertexId count = g.vertex_count();
  for (VertexId u = 0; u < count; ++u) {
    std::set<VertexId> second;
    for (VertexId x : full.neighbors(u))
      for (VertexId v : full.neighbors(x))
        if (v > u) second.insert(v);
    for (VertexId v : second) {
      const std::array<VertexId, 2> pair{u, v};
      const auto cn = common_neighbors(full, pair);
      out.max_pair_common =
          std::max(out.max_pair_common, static_cast<int>(cn.size()));
      if (static_cast<int>(cn.size()) <= out.r) continue;
      for (VertexId w : full.neighbors(cn.front())) {
        if (w == u || w == v) continue;
        std::vector<VertexId> shared;
        for (VertexId y : cn)
          if (full.adjacent(w, y)) shared.push_back(y);
        if (static_cast<int>(shared.size()) > out.r) {
          out.r = static_cast<int>(shared.size());
          out.witness = {u, v, w};
          std::sort(out.witness.begin(), out.witness.end());
          out.witness_common = shared;
        }
      }
    }
  }
  out.r = std::max(out.r, 0);
  out.value = (3 * out.k - out.r) / 4;
  return out;
}

int pi3_formula(int n) { return (6 * n - 9) / 4; }

Pi3Report make_report(int n, const Pi3Lower& lower, const Pi3Upper& upper) {
  Pi3Report r;
  r.n = n;
  r.lower = lower.value;
  r.upper = upper.value;
  r.formula = pi3_formula(n);
  r.r = upper.r;
  r.evaluated = lower.evaluated;
  r.exhaustive = lower.exhaustive;
  r.lower_witness = lower.witness.structure.omega;
  r.r_witness = upper.witness;
  return r;
}

}  // namespace cwpath
