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

#include "cwpath/construct.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "cwpath/error.hpp"
#include "cwpath/menger.hpp"

namespace cwpath {

namespace {

constexpr std::array<const char*, 9> kCaseNames{
    "even",        "odd-1.1", "odd-1.2.1", "odd-1.2.2", "odd-2",
    "odd-3.1",     "odd-3.2", "odd-3.3",   "fallback-generic"};

}  // namespace

std::string to_string(CaseId id) {
  return kCaseNames[static_cast<std::size_t>(id)];
}

CaseId parse_case_id(const std::string& text) {
  for (std::size_t i = 0; i < kCaseNames.size(); ++i)
    if (text == kCaseNames[i]) return static_cast<CaseId>(i);
  throw Error(Errc::ParseError, "unknown case id '" + text + "'");
}

namespace {

[[noreturn]] void step_failed(const std::string& why) {
  throw Error(Errc::ConstructionFailed, why);
}

using Seq = std::vector<VertexId>;

Seq reversed(Seq s) {
  std::reverse(s.begin(), s.end());
  return s;
}

Seq operator+(Seq lhs, const Seq& rhs) {
  lhs.insert(lhs.end(), rhs.begin(), rhs.end());
  return lhs;
}

// Sub-sequence of `path` between two of its vertices, in the given order.
Seq segment(const Seq& path, VertexId from, VertexId to) {
  const auto i = std::find(path.begin(), path.end(), from) - path.begin();
  const auto j = std::find(path.begin(), path.end(), to) - path.begin();
  if (i <= j) return Seq(path.begin() + i, path.begin() + j + 1);
  return reversed(Seq(path.begin() + j, path.begin() + i + 1));
}

Seq shortest_path(const SubgraphView& view, VertexId u, VertexId v) {
  std::vector<VertexId> parent(view.base().vertex_count(), kNoVertex);
  std::deque<VertexId> queue{u};
  parent[u] = u;
  while (!queue.empty() && parent[v] == kNoVertex) {
    const VertexId x = queue.front();
    queue.pop_front();
    view.for_each_neighbor(x, [&](VertexId w) {
      if (parent[w] == kNoVertex) {
        parent[w] = x;
        queue.push_back(w);
      }
    });
  }
  if (parent[v] == kNoVertex) return {};
  Seq out{v};
  while (out.back() != u) out.push_back(parent[out.back()]);
  return reversed(out);
}

// Removes chords, except one joining the two ends.
Seq chordless(const SubgraphView& view, Seq p) {
  for (std::size_t i = 0; i + 2 < p.size(); ++i) {
    for (std::size_t j = p.size() - 1; j > i + 1; --j) {
      if (i == 0 && j == p.size() - 1) continue;
      if (view.adjacent(p[i], p[j])) {
        p.erase(p.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                p.begin() + static_cast<std::ptrdiff_t>(j));
        break;
      }
    }
  }
  return p;
}

// Pair paths keyed by unordered terminal pair; orientation is fixed when the
// final labelling is known.
class PathStore {
 public:
  void add(const Seq& p) {
    if (p.size() < 2) step_failed("degenerate path assembled");
    paths_[key(p.front(), p.back())].push_back(p);
  }
  std::vector<Seq>& between(VertexId u, VertexId v) { return paths_[key(u, v)]; }
  void remove(const Seq& p) {
    auto& list = between(p.front(), p.back());
    list.erase(std::find(list.begin(), list.end(), p));
  }
  // The path between u and v having `inner` as a vertex.
  Seq find(VertexId u, VertexId v, VertexId inner) {
    for (const Seq& p : between(u, v))
      if (std::find(p.begin(), p.end(), inner) != p.end()) return p;
    step_failed("no (" + std::to_string(u) + "," + std::to_string(v) +
                ")-path through " + std::to_string(inner));
  }
  bool uses(VertexId v) const {
    for (const auto& [k, list] : paths_)
      for (const Seq& p : list)
        if (std::find(p.begin(), p.end(), v) != p.end()) return true;
    return false;
  }

  TripodStructure orient(const std::array<VertexId, 3>& abc) const {
    TripodStructure s;
    s.omega = abc;
    for (int k = 0; k < 3; ++k) {
      const VertexId from = abc[kBundleEnds[k][0]];
      const VertexId to = abc[kBundleEnds[k][1]];
      auto it = paths_.find(key(from, to));
      if (it == paths_.end()) continue;
      for (const Seq& p : it->second)
        s.bundle(static_cast<Bundle>(k))
            .push_back(Path{p.front() == from ? p : reversed(p)});
    }
    return s;
  }

 private:
  static std::pair<VertexId, VertexId> key(VertexId u, VertexId v) {
    return std::minmax(u, v);
  }
  std::map<std::pair<VertexId, VertexId>, std::vector<Seq>> paths_;
};

// How a port vertex of a flow problem hooks back to its terminal: `lead`
// runs from the terminal up to, not including, the port.
struct Port {
  VertexId vertex;
  Seq lead;
};

// Disjoint paths from `from` to `to` (k = |to|), each extended by the leads
// of its two ports.
void route_ports(const SubgraphView& view, const std::vector<Port>& from,
                 const std::vector<Port>& to, PathStore& store) {
  Seq xs, ys;
  std::map<VertexId, Seq> lead;
  for (const Port& p : from) {
    xs.push_back(p.vertex);
    lead[p.vertex] = p.lead;
  }
  std::map<VertexId, Seq> tail;
  for (const Port& p : to) {
    ys.push_back(p.vertex);
    tail[p.vertex] = p.lead;
  }
  const PathFamily family =
      disjoint_set_paths(view, xs, ys, static_cast<int>(ys.size()));
  for (const Path& p : family.paths)
    store.add(lead.at(p.front()) + p.vertices + reversed(tail.at(p.back())));
}

// Fan from src; a target equal to src yields the one-vertex path.
std::map<VertexId, Seq> fan(const SubgraphView& view, VertexId src,
                            const Seq& targets) {
  std::map<VertexId, Seq> out;
  Seq rest;
  for (VertexId t : targets) {
    if (t == src)
      out[t] = Seq{src};
    else
      rest.push_back(t);
  }
  if (std::set<VertexId>(rest.begin(), rest.end()).size() != rest.size())
    step_failed("fan targets from " + std::to_string(src) + " repeat");
  if (!rest.empty()) {
    const PathFamily family =
        k_fan(view, src, rest, static_cast<int>(rest.size()));
    for (const Path& p : family.paths) out[p.back()] = p.vertices;
  }
  return out;
}

void validate(const CayleyGraph& g, const std::array<VertexId, 3>& omega) {
  if (g.family() != Family::Wheel)
    throw Error(Errc::WrongFamily, "structures are built in the wheel graph");
  for (int i = 0; i < 3; ++i) {
    if (omega[i] >= g.vertex_count())
      throw Error(Errc::RankOutOfRange,
                  "vertex " + std::to_string(omega[i]) + " out of range");
    for (int j = i + 1; j < 3; ++j)
      if (omega[i] == omega[j])
        throw Error(Errc::DuplicateVertex,
                    "terminals repeat vertex " + std::to_string(omega[i]));
  }
}

class Builder {
 public:
  Builder(const CayleyGraph& g, const std::array<VertexId, 3>& omega,
          const ConstructOptions& options)
      : g_(g),
        omega_(omega),
        options_(options),
        full_(g.full_view()),
        target_(StructureTarget::for_degree(g.n())),
        d_(target_.d) {}

  Construction same_copy();
  Construction two_copies();
  Construction three_copies();
  Construction three_copies(CaseId id, VertexId a, VertexId b, VertexId c);
  Construction three_copies_32(VertexId a, VertexId b, VertexId c);

 private:
  Construction finish(PathStore& store, const std::array<VertexId, 3>& abc,
                      CaseId id);
  void subcase_1_1(PathStore& store, std::array<VertexId, 3> abc,
                   VertexId free);
  void note(std::string s) { trace_.notes.push_back(std::move(s)); }
  void aux(const std::string& name, Seq vs) {
    trace_.auxiliary[name] = std::move(vs);
  }
  OutsideNeighbors out(VertexId v) const { return g_.outside_neighbors(v); }
  CopyId copy(VertexId v) const { return g_.copy_of(v); }
  SubgraphView copies_view(std::initializer_list<CopyId> c) const {
    const std::vector<CopyId> list(c);
    return copy_union(g_, list);
  }
  SubgraphView without_copies(std::initializer_list<CopyId> c) const {
    const std::vector<CopyId> list(c);
    return delete_copies(g_, list);
  }
  VertexId partner(VertexId v, CopyId target) const {
    for (VertexId o : out(v).as_array())
      if (copy(o) == target) return o;
    return kNoVertex;
  }
  Seq hat_neighbors(VertexId t, const std::set<CopyId>& home) const {
    Seq s;
    for (VertexId o : out(t).as_array())
      if (home.count(copy(o)) == 0) s.push_back(o);
    std::sort(s.begin(), s.end());
    return s;
  }
  Seq pick_matched(CopyId from, CopyId to, int count,
                   const std::set<VertexId>& blocked,
                   std::set<VertexId>& used) const;
  std::vector<Port> ports(VertexId terminal, Seq vertices) const {
    std::vector<Port> p;
    for (VertexId v : vertices) p.push_back({v, {terminal}});
    return p;
  }

  const CayleyGraph& g_;
  std::array<VertexId, 3> omega_;
  ConstructOptions options_;
  SubgraphView full_;
  StructureTarget target_;
  int d_;
  CaseTrace trace_;
  TripodStats stats_;
};

Construction Builder::finish(PathStore& store,
                             const std::array<VertexId, 3>& abc, CaseId id) {
  Construction c;
  c.structure = store.orient(abc);
  trace_.case_id = id;
  for (int i = 0; i < 3; ++i) trace_.copies[i] = copy(abc[i]);
  const Verdict v = verify_tripod(full_, c.structure, target_);
  if (!v.ok())
    step_failed(to_string(id) + " assembly failed verification: " +
                v.violations.front());
  const auto counts = c.structure.counts();
  if (counts != std::array<int, 3>{target_.x, target_.y, target_.z})
    step_failed(to_string(id) + " assembled bundles (" +
                std::to_string(counts[0]) + "," + std::to_string(counts[1]) +
                "," + std::to_string(counts[2]) + ")");
  c.trace = trace_;
  c.stats = stats_;
  return c;
}

// ----- all terminals in one copy -----

void Builder::subcase_1_1(PathStore& store, std::array<VertexId, 3> abc,
                          VertexId free) {
  const auto [a, b, c] = abc;
  const auto oc = out(c);
  std::vector<Port> xs = ports(c, {oc.plus, oc.minus, oc.star});
  xs.push_back({out(free).plus, {c, free}});
  std::vector<Port> ys = ports(a, {out(a).plus, out(a).minus});
  for (const Port& p : ports(b, {out(b).plus, out(b).minus})) ys.push_back(p);
  Seq xv, yv;
  for (const Port& p : xs) xv.push_back(p.vertex);
  for (const Port& p : ys) yv.push_back(p.vertex);
  aux("X", xv);
  aux("Y", yv);
  route_ports(without_copies({copy(a)}), xs, ys, store);
}

Construction Builder::same_copy() {
  const CopyId home = copy(omega_[0]);
  if (copy(omega_[1]) != home || copy(omega_[2]) != home)
    throw Error(Errc::PreconditionFailed, "terminals are not in one copy");
  const SubgraphView inside = copies_view({home});
  const int base = 2 * d_ - 2;
  TripodOutcome outcome = solve_tripod(inside, omega_, {base, base, base, d_},
                                       options_.budget);
  stats_ = outcome.stats;
  if (!outcome.ok())
    step_failed("no base structure inside the copy: " + outcome.diagnostic);

  // Normalize: a direct edge becomes its own path, and no path keeps a
  // chord. Both only free vertices.
  TripodStructure& s = *outcome.structure;
  for (int k = 0; k < 3; ++k) {
    auto& bundle = s.bundle(static_cast<Bundle>(k));
    const VertexId u = omega_[kBundleEnds[k][0]];
    const VertexId v = omega_[kBundleEnds[k][1]];
    const bool has_direct = std::any_of(
        bundle.begin(), bundle.end(), [](const Path& p) { return p.length() == 1; });
    if (inside.adjacent(u, v) && !has_direct && !bundle.empty()) {
      auto longest = std::max_element(
          bundle.begin(), bundle.end(),
          [](const Path& x, const Path& y) { return x.length() < y.length(); });
      *longest = Path{{u, v}};
    }
    for (Path& p : bundle) p.vertices = chordless(inside, p.vertices);
  }
  PathStore store;
  for (int k = 0; k < 3; ++k)
    for (const Path& p : s.bundle(static_cast<Bundle>(k))) store.add(p.vertices);

  // Subcase 1.1: a terminal keeps an unused inside neighbor.
  for (int i = 0; i < 3; ++i) {
    for (VertexId w : inside.neighbors(omega_[i])) {
      if (store.uses(w)) continue;
      std::array<VertexId, 3> abc{omega_[(i + 1) % 3], omega_[(i + 2) % 3],
                                  omega_[i]};
      if (i == 1) std::swap(abc[0], abc[1]);
      aux("c'", {w});
      note("terminal " + std::to_string(omega_[i]) +
           " has an unused inside neighbor");
      subcase_1_1(store, abc, w);
      return finish(store, abc, CaseId::OddCase1_1);
    }
  }

  // Special neighbors: for terminal i, the lowest neighbor on no path of
  // its own two bundles. It then lies inside a path of the opposite pair.
  std::array<VertexId, 3> special{};
  std::array<Seq, 3> carrier;
  for (int i = 0; i < 3; ++i) {
    const VertexId t = omega_[i];
    const VertexId p = omega_[(i + 1) % 3];
    const VertexId q = omega_[(i + 2) % 3];
    bool found = false;
    for (VertexId w : inside.neighbors(t)) {
      bool on_own = false;
      for (VertexId other : {p, q})
        for (const Seq& path : store.between(t, other))
          if (std::find(path.begin(), path.end(), w) != path.end())
            on_own = true;
      if (on_own) continue;
      special[i] = w;
      carrier[i] = store.find(p, q, w);
      found = true;
      break;
    }
    if (!found)
      step_failed("terminal " + std::to_string(t) +
                  " has no neighbor outside its own bundles");
  }
  aux("a'", {special[0]});
  aux("b'", {special[1]});
  aux("c'", {special[2]});

  // Subcase 1.2.1: a segment from a special vertex to an end of its carrier
  // has length >= 2. The owner becomes a and that end becomes c.
  for (int i = 0; i < 3; ++i) {
    for (int e : {(i + 1) % 3, (i + 2) % 3}) {
      const VertexId end = omega_[e];
      const Seq seg = segment(carrier[i], special[i], end);
      if (seg.size() < 3) continue;
      const VertexId a = omega_[i];
      const VertexId c = end;
      const VertexId b = omega_[3 - i - e];
      const auto spec_of = [&](VertexId t) {
        return special[std::find(omega_.begin(), omega_.end(), t) -
                       omega_.begin()];
      };
      const VertexId a1 = spec_of(a);
      const VertexId b1 = spec_of(b);
      const VertexId c1 = spec_of(c);
      const Seq r1 = store.find(b, c, a1);
      const Seq q1 = store.find(a, c, b1);
      const Seq p1 = store.find(a, b, c1);
      store.remove(r1);
      store.remove(q1);
      store.remove(p1);
      store.add(Seq{a} + segment(r1, a1, b));
      store.add(segment(p1, a, c1) + Seq{c});
      store.add(Seq{b} + segment(q1, b1, c));
      const Seq rc = segment(r1, b, c);
      const VertexId gv = rc[rc.size() - 2];
      aux("g", {gv});
      note("segment from " + std::to_string(a1) + " to " + std::to_string(c) +
           " has length " + std::to_string(seg.size() - 1));
      subcase_1_1(store, {a, b, c}, gv);
      return finish(store, {a, b, c}, CaseId::OddCase1_2_1);
    }
  }

  // Subcase 1.2.2: a', b', c' are common neighbors of all three terminals.
  const int n = g_.n();
  std::optional<std::array<VertexId, 3>> roles;
  for (int r = 0; r < 6 && !roles; ++r) {
    std::array<VertexId, 3> t{omega_[r % 3], omega_[(r + 1) % 3],
                              omega_[(r + 2) % 3]};
    if (r >= 3) std::swap(t[1], t[2]);
    const Permutation& pa = g_.permutation(t[0]);
    for (int j = 2; j <= n - 2; ++j) {
      std::vector<int> images(n);
      for (int p = 1; p <= n; ++p) images[p - 1] = p;
      images[0] = j;
      images[j - 1] = j + 1;
      images[j] = 1;
      const Permutation rho = Permutation::from_images(images);
      if (g_.vertex(compose(pa, rho)) == t[1] &&
          g_.vertex(compose(pa, rho.inverse())) == t[2]) {
        roles = t;
        trace_.j = j;
        break;
      }
    }
  }
  if (!roles) step_failed("common-neighbor configuration not recognized");
  const auto [a, b, c] = *roles;
  for (VertexId f : special)
    for (VertexId t : omega_)
      if (!inside.adjacent(f, t))
        step_failed("special vertex " + std::to_string(f) +
                    " is not a common neighbor");
  for (int i = 0; i < 3; ++i) store.remove(carrier[i]);

  // Four disjoint paths outside the copy between outside neighbors of
  // different terminals.
  struct Link {
    VertexId u, v;
    Seq path;
  };
  std::vector<Link> links;
  const int j = *trace_.j;
  std::vector<std::pair<VertexId, VertexId>> owned;  // (outside vertex, owner)
  for (VertexId t : {a, b, c})
    for (VertexId o : out(t).as_array()) owned.emplace_back(o, t);
  const auto pair_count = [&](VertexId u, VertexId v) {
    return std::count_if(links.begin(), links.end(), [&](const Link& l) {
      return (l.u == u && l.v == v) || (l.u == v && l.v == u);
    });
  };
  if (j == 2 || j == n - 2) {
    std::map<int, std::vector<std::pair<VertexId, VertexId>>> groups;
    for (const auto& o : owned) groups[copy(o.first).value].push_back(o);
    std::vector<std::pair<int, std::vector<std::pair<VertexId, VertexId>>>>
        ordered(groups.begin(), groups.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& x, const auto& y) {
                       return x.second.size() < y.second.size();
                     });
    for (const auto& [cid, members] : ordered) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t x = 0; x < members.size(); ++x)
        for (std::size_t y = x + 1; y < members.size(); ++y) {
          if (members[x].second == members[y].second) continue;
          if (!best || pair_count(members[x].second, members[y].second) <
                           pair_count(members[best->first].second,
                                      members[best->second].second))
            best = std::make_pair(x, y);
        }
      if (!best) continue;
      const auto& [xv, xo] = members[best->first];
      const auto& [yv, yo] = members[best->second];
      Seq p = shortest_path(copies_view({CopyId{cid}}), xv, yv);
      if (p.empty()) step_failed("outside neighbors not joined in a copy");
      links.push_back({xo, yo, Seq{xo} + p + Seq{yo}});
    }
  } else {
    const CopyId k1 = copy(out(a).minus);
    const CopyId k2 = copy(out(a).star);
    for (VertexId t : {b, c})
      if (copy(out(t).minus) != k1 || copy(out(t).star) != k2)
        step_failed("outside neighbors not grouped as expected");
    const Seq minus{out(a).minus, out(b).minus, out(c).minus};
    const Seq star{out(a).star, out(b).star, out(c).star};
    std::optional<std::pair<VertexId, VertexId>> link;
    for (const auto& [u, v] : cross_edges(g_, k1, k2))
      if (std::find(minus.begin(), minus.end(), u) == minus.end() &&
          std::find(star.begin(), star.end(), v) == star.end()) {
        link = std::make_pair(u, v);
        break;
      }
    if (!link) step_failed("no free cross edge between the two copies");
    const auto [gv, gv2] = *link;
    aux("g", {gv, gv2});
    const SubgraphView in1 = copies_view({k1});
    const Seq x1{minus[0], minus[1]};
    const Seq y1{minus[2], gv};
    const PathFamily f1 = disjoint_set_paths(in1, x1, y1, 2);
    VertexId u_term = a;
    Seq u_part;
    for (const Path& p : f1.paths) {
      const VertexId owner = p.front() == minus[0] ? a : b;
      if (p.back() == gv) {
        u_term = owner;
        u_part = Seq{owner} + p.vertices;
      } else {
        links.push_back({owner, c, Seq{owner} + p.vertices + Seq{c}});
      }
    }
    std::map<VertexId, VertexId> star_owner{
        {star[0], a}, {star[1], b}, {star[2], c}};
    const VertexId u_star = out(u_term).star;
    Seq y2;
    for (VertexId s : star)
      if (s != u_star) y2.push_back(s);
    const Seq x2{u_star, gv2};
    const PathFamily f2 = disjoint_set_paths(copies_view({k2}), x2, y2, 2);
    for (const Path& p : f2.paths) {
      const VertexId end = star_owner.at(p.back());
      if (p.front() == gv2)
        links.push_back({u_term, end, u_part + p.vertices + Seq{end}});
      else
        links.push_back({u_term, end, Seq{u_term} + p.vertices + Seq{end}});
    }
    const Seq plus{out(a).plus, out(b).plus, out(c).plus};
    const SubgraphView plus_view =
        copies_view({copy(plus[0]), copy(plus[1]), copy(plus[2])});
    const std::array<std::pair<int, int>, 3> choices{{{0, 2}, {0, 1}, {1, 2}}};
    const std::array<VertexId, 3> term{a, b, c};
    bool closed = false;
    for (const auto& [x, y] : choices) {
      if (pair_count(term[x], term[y]) >= 3) continue;
      Seq p = shortest_path(plus_view, plus[x], plus[y]);
      if (p.empty()) continue;
      links.push_back({term[x], term[y], Seq{term[x]} + p + Seq{term[y]}});
      closed = true;
      break;
    }
    if (!closed) step_failed("plus neighbors not joined");
  }
  if (links.size() != 4) step_failed("expected four outside links");
  for (const Link& l : links) store.add(l.path);

  // The three common neighbors complete the counts: one pair needs
  // 1 - o paths, the other two 3 - o each.
  const std::array<std::pair<VertexId, VertexId>, 3> pairs{
      {{a, b}, {a, c}, {b, c}}};
  std::optional<int> shortp;
  for (int k = 0; k < 3 && !shortp; ++k)
    if (pair_count(pairs[k].first, pairs[k].second) <= 1) shortp = k;
  if (!shortp) step_failed("outside links cannot be balanced");
  Seq flexible(special.begin(), special.end());
  std::sort(flexible.begin(), flexible.end());
  std::size_t next = 0;
  for (int k = 0; k < 3; ++k) {
    const auto [u, v] = pairs[k];
    const int need = static_cast<int>((k == *shortp ? 1 : 3) - pair_count(u, v));
    if (need < 0) step_failed("outside links overshoot a pair");
    for (int i = 0; i < need; ++i) {
      if (next >= flexible.size()) step_failed("not enough common neighbors");
      store.add(Seq{u, flexible[next++], v});
    }
  }
  const auto [sa, sb] = pairs[*shortp];
  const VertexId sc = a ^ b ^ c ^ sa ^ sb;
  return finish(store, {sa, sb, sc}, CaseId::OddCase1_2_2);
}

// ----- two terminals share a copy -----

Construction Builder::two_copies() {
  std::optional<std::pair<int, int>> shared;
  for (int i = 0; i < 3; ++i)
    for (int k = i + 1; k < 3; ++k)
      if (copy(omega_[i]) == copy(omega_[k])) shared = std::make_pair(i, k);
  if (!shared || (copy(omega_[0]) == copy(omega_[1]) &&
                   copy(omega_[1]) == copy(omega_[2])))
    throw Error(Errc::PreconditionFailed,
                "exactly two terminals must share a copy");
  const VertexId b = omega_[3 - shared->first - shared->second];
  std::string last_error;
  for (int attempt = 0; attempt < 2; ++attempt) {
    VertexId a = omega_[shared->first];
    VertexId c = omega_[shared->second];
    if (attempt == 1) std::swap(a, c);
    try {
      trace_ = CaseTrace{};
      const CopyId home = copy(a);
      const SubgraphView inside = copies_view({home});
      const PathFamily ac = max_internally_disjoint_paths(inside, a, c);
      if (static_cast<int>(ac.size()) < 4 * d_ - 3)
        step_failed("only " + std::to_string(ac.size()) + " (a,c)-paths");
      std::vector<Seq> long_paths, rest;
      for (const Path& p : ac.paths) {
        if (p.length() >= 3 &&
            static_cast<int>(long_paths.size()) < 2 * d_ - 3)
          long_paths.push_back(p.vertices);
        else
          rest.push_back(p.vertices);
      }
      if (static_cast<int>(long_paths.size()) < 2 * d_ - 3)
        step_failed("too few (a,c)-paths of length >= 3");
      rest.resize(2 * d_);
      PathStore store;
      for (const Seq& p : rest) store.add(p);
      Seq ma, mc, nset;
      std::map<VertexId, Seq> lead;
      for (const Seq& p : long_paths) {
        const VertexId u = p[1];
        const VertexId v = p[p.size() - 2];
        ma.push_back(u);
        mc.push_back(v);
        lead[out(u).star] = {a, u};
        lead[out(v).star] = {c, v};
      }
      lead[out(a).star] = {a};
      lead[out(c).plus] = {c};
      lead[out(c).minus] = {c};
      lead[out(c).star] = {c};
      for (const auto& [v, l] : lead) nset.push_back(v);
      if (static_cast<int>(nset.size()) != 4 * d_ - 2)
        step_failed("N has " + std::to_string(nset.size()) + " members");
      aux("M_a", ma);
      aux("M_c", mc);
      aux("N", nset);
      const auto paths = fan(without_copies({home}), b, nset);
      for (const auto& [target, p] : paths)
        store.add(p + reversed(lead.at(target)));
      return finish(store, {a, b, c}, CaseId::OddCase2);
    } catch (const Error& e) {
      if (e.code() != Errc::ConstructionFailed &&
          e.code() != Errc::InsufficientConnectivity)
        throw;
      last_error = e.what();
    }
  }
  step_failed(last_error);
}

// ----- three distinct copies -----

Construction Builder::three_copies() {
  for (int i = 0; i < 3; ++i)
    for (int k = i + 1; k < 3; ++k)
      if (copy(omega_[i]) == copy(omega_[k]))
        throw Error(Errc::PreconditionFailed,
                    "terminals must lie in three copies");
  const std::set<CopyId> home{copy(omega_[0]), copy(omega_[1]),
                              copy(omega_[2])};
  const auto in_hat = [&](VertexId v) { return home.count(copy(v)) == 0; };
  std::array<int, 3> h{};
  for (int i = 0; i < 3; ++i)
    h[i] = static_cast<int>(hat_neighbors(omega_[i], home).size());

  // Applicable (subcase, a, b, c) labellings; the subcases overlap and
  // each is tried in turn.
  struct Plan {
    CaseId id;
    VertexId a, b, c;
  };
  std::vector<Plan> plans;
  const VertexId all = omega_[0] ^ omega_[1] ^ omega_[2];
  for (int ci = 0; ci < 3; ++ci) {
    if (h[ci] != 2) continue;
    const VertexId c = omega_[ci];
    for (VertexId o : out(c).as_array()) {
      if (in_hat(o)) continue;
      for (int i = 0; i < 3; ++i)
        if (i != ci && copy(omega_[i]) == copy(o))
          plans.push_back({CaseId::OddCase3_1, omega_[i],
                           all ^ omega_[i] ^ c, c});
    }
  }
  for (int want : {1, 3})
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k)
        if (i != k && h[i] == want && h[k] == want)
          plans.push_back({want == 1 ? CaseId::OddCase3_2 : CaseId::OddCase3_3,
                           all ^ omega_[i] ^ omega_[k], omega_[i], omega_[k]});
  std::stable_partition(plans.begin(), plans.end(), [&](const Plan& p) {
    return p.id != CaseId::OddCase3_2 || !full_.adjacent(p.b, p.c);
  });
  std::string last_error = "no subcase applies";
  for (const Plan& plan : plans) {
    try {
      trace_ = CaseTrace{};
      return three_copies(plan.id, plan.a, plan.b, plan.c);
    } catch (const Error& e) {
      if (e.code() != Errc::ConstructionFailed &&
          e.code() != Errc::InsufficientConnectivity)
        throw;
      last_error = to_string(plan.id) + ": " + e.what();
    }
  }
  step_failed(last_error);
}

Construction Builder::three_copies(CaseId id, VertexId a, VertexId b,
                                   VertexId c) {
  if (id == CaseId::OddCase3_2) return three_copies_32(a, b, c);
  const std::set<CopyId> home{copy(a), copy(b), copy(c)};
  const CopyId ca = copy(a), cb = copy(b), cc = copy(c);

  std::array<int, 3> size{};
  if (id == CaseId::OddCase3_1) size = {2 * d_ - 2, 2 * d_ - 2, 2 * d_ - 1};
  if (id == CaseId::OddCase3_3) size = {2 * d_ - 2, 2 * d_ - 1, 2 * d_ - 2};

  // Matched pairs: a vertex and its unique outside neighbor in the partner
  // copy, avoiding terminals and their outside neighbors on both sides.
  std::set<VertexId> blocked{a, b, c};
  for (VertexId t : {a, b, c})
    for (VertexId o : out(t).as_array()) blocked.insert(o);
  std::set<VertexId> used;
  const auto pick = [&](CopyId from, CopyId to, int count, const char* name) {
    Seq chosen = pick_matched(from, to, count, blocked, used);
    aux(name, chosen);
    return chosen;
  };
  const Seq x1 = pick(ca, cb, size[0], "X1");
  const Seq x2 = pick(ca, cc, size[1], "X2");
  const Seq x3 = pick(cb, cc, size[2], "X3");

  Seq ta = x1 + x2, tb, tc;
  for (VertexId x : x1) tb.push_back(partner(x, cb));
  tb = tb + x3;
  for (VertexId x : x2) tc.push_back(partner(x, cc));
  for (VertexId x : x3) tc.push_back(partner(x, cc));

  PathStore store;
  const SubgraphView hat = [&] {
    const std::vector<CopyId> drop{ca, cb, cc};
    return delete_copies(g_, drop);
  }();
  VertexId c_in = kNoVertex;
  if (id == CaseId::OddCase3_1) {
    c_in = partner(c, ca);
    ta.push_back(c_in);
  }
  auto fa = fan(copies_view({ca}), a, ta);
  auto fb = fan(copies_view({cb}), b, tb);
  auto fc = fan(copies_view({cc}), c, tc);
  for (VertexId x : x1) store.add(fa.at(x) + reversed(fb.at(partner(x, cb))));
  for (VertexId x : x2) store.add(fa.at(x) + reversed(fc.at(partner(x, cc))));
  for (VertexId x : x3) store.add(fb.at(x) + reversed(fc.at(partner(x, cc))));

  const Seq ha = hat_neighbors(a, home), hb = hat_neighbors(b, home),
            hc = hat_neighbors(c, home);
  if (id == CaseId::OddCase3_1) {
    store.add(fa.at(c_in) + Seq{c});
    std::optional<std::pair<VertexId, VertexId>> ends;
    for (VertexId x : ha)
      for (VertexId y : hb)
        if (x != y && !ends) ends = std::make_pair(x, y);
    if (!ends) step_failed("a and b share their only neighbor outside");
    route_ports(hat, ports(c, hc), {{ends->first, {a}}, {ends->second, {b}}},
                store);
  } else {
    Seq rest;
    for (VertexId y : hb)
      if (y != ha.front()) rest.push_back(y);
    std::vector<Port> ys{{ha.front(), {a}}, {rest[0], {b}}, {rest[1], {b}}};
    route_ports(hat, ports(c, hc), ys, store);
  }
  return finish(store, {a, b, c}, id);
}


Seq Builder::pick_matched(CopyId from, CopyId to, int count,
                          const std::set<VertexId>& blocked,
                          std::set<VertexId>& used) const {
  Seq chosen;
  for (VertexId w : g_.copy_members(from)) {
    if (static_cast<int>(chosen.size()) == count) break;
    if (blocked.count(w) || used.count(w)) continue;
    const VertexId p = partner(w, to);
    if (p == kNoVertex || blocked.count(p) || used.count(p)) continue;
    chosen.push_back(w);
    used.insert(w);
    used.insert(p);
  }
  if (static_cast<int>(chosen.size()) < count)
    step_failed("not enough matched candidates between copies " +
                std::to_string(from.value) + " and " + std::to_string(to.value));
  return chosen;
}

// Subcase 3.2 as an allocation problem. Every outside neighbor that a
// terminal has in another terminal's copy is a special vertex: it is either
// a fan target of the host terminal continuing to its owner, a two-edge path
// between its two owners (removed from the host copy), or left alone. The
// matched sets X1..X3 make up the remaining counts, and each fan stays
// within the connectivity left in its copy.
Construction Builder::three_copies_32(VertexId a, VertexId b, VertexId c) {
  const std::array<VertexId, 3> t{a, b, c};
  const std::array<CopyId, 3> cp{copy(a), copy(b), copy(c)};
  const std::set<CopyId> home(cp.begin(), cp.end());
  constexpr int kShared = 8, kUnused = 9;
  const auto pair_index = [](int i, int j) {
    return i + j - 1;  // ab 0, ac 1, bc 2
  };

  struct Special {
    VertexId v;
    int host;
    std::vector<int> owners;
    std::vector<int> options;
  };
  std::vector<Special> specials;
  for (int h = 0; h < 3; ++h)
    for (int p = 0; p < 3; ++p) {
      if (p == h) continue;
      const VertexId v = partner(t[p], cp[h]);
      if (v == kNoVertex) continue;
      auto it = std::find_if(specials.begin(), specials.end(),
                             [&](const Special& s) { return s.v == v; });
      if (it == specials.end())
        specials.push_back({v, h, {p}, {}});
      else
        it->owners.push_back(p);
    }
  // The plain allocation first: b and c enter a's copy, c enters b's copy
  // and b enters c's copy; a's own neighbors stay unused.
  for (Special& s : specials) {
    const bool plain = std::any_of(s.owners.begin(), s.owners.end(),
                                   [](int p) { return p != 0; });
    const bool can_share = s.owners.size() == 2 && s.v != t[s.host];
    std::vector<int> fans_plain, fans_other;
    for (int k = 0; k < static_cast<int>(s.owners.size()); ++k)
      (s.owners[k] != 0 ? fans_plain : fans_other).push_back(k);
    if (plain) {
      s.options = fans_plain;
      if (can_share) s.options.push_back(kShared);
      s.options.insert(s.options.end(), fans_other.begin(), fans_other.end());
      s.options.push_back(kUnused);
    } else {
      s.options.push_back(kUnused);
      s.options.insert(s.options.end(), fans_other.begin(), fans_other.end());
    }
  }
  std::vector<std::pair<int, int>> hat_pairs;
  std::array<Seq, 3> hat;
  for (int i = 0; i < 3; ++i) hat[i] = hat_neighbors(t[i], home);
  for (auto [i, j] : {std::pair{0, 2}, std::pair{0, 1}, std::pair{1, 2}})
    if (!hat[i].empty() && !hat[j].empty()) hat_pairs.push_back({i, j});
  hat_pairs.push_back({-1, -1});

  const std::array<int, 3> need{2 * d_ - 2, 2 * d_, 2 * d_};
  const int copy_kappa = 4 * d_ - 3;
  std::set<VertexId> blocked(t.begin(), t.end());
  for (VertexId v : t)
    for (VertexId o : out(v).as_array()) blocked.insert(o);
  const SubgraphView hat_view = [&] {
    const std::vector<CopyId> drop(cp.begin(), cp.end());
    return delete_copies(g_, drop);
  }();

  std::vector<std::size_t> choice(specials.size(), 0);
  std::size_t hat_choice = 0;
  const auto advance = [&] {
    for (std::size_t i = 0; i < choice.size(); ++i) {
      if (++choice[i] < specials[i].options.size()) return true;
      choice[i] = 0;
    }
    return ++hat_choice < hat_pairs.size();
  };
  std::string last_error = "no allocation balances the counts";
  int attempts = 0;
  do {
    std::array<int, 3> links{}, fan_specials{}, removed_count{};
    std::set<int> direct;
    bool ok = true;
    for (std::size_t i = 0; i < specials.size() && ok; ++i) {
      const Special& s = specials[i];
      const int opt = s.options[choice[i]];
      if (opt == kUnused) continue;
      if (opt == kShared) {
        ++links[pair_index(s.owners[0], s.owners[1])];
        ++removed_count[s.host];
        continue;
      }
      const int p = s.owners[opt];
      ++links[pair_index(s.host, p)];
      if (s.v == t[s.host])
        ok = direct.insert(pair_index(s.host, p)).second;
      else
        ++fan_specials[s.host];
    }
    const auto [hi, hj] = hat_pairs[hat_choice];
    if (hi >= 0) ++links[pair_index(hi, hj)];
    std::array<int, 3> x{};
    for (int k = 0; k < 3 && ok; ++k) {
      x[k] = need[k] - links[k];
      ok = x[k] >= 0;
    }
    if (ok)
      ok = x[0] + x[1] + fan_specials[0] <= copy_kappa - removed_count[0] &&
           x[0] + x[2] + fan_specials[1] <= copy_kappa - removed_count[1] &&
           x[1] + x[2] + fan_specials[2] <= copy_kappa - removed_count[2];
    if (!ok) continue;
    if (++attempts > 24) break;

    try {
      trace_ = CaseTrace{};
      std::set<VertexId> used;
      const Seq x1 = pick_matched(cp[0], cp[1], x[0], blocked, used);
      const Seq x2 = pick_matched(cp[0], cp[2], x[1], blocked, used);
      const Seq x3 = pick_matched(cp[1], cp[2], x[2], blocked, used);
      aux("X1", x1);
      aux("X2", x2);
      aux("X3", x3);
      std::array<Seq, 3> targets, removed;
      for (VertexId v : x1) {
        targets[0].push_back(v);
        targets[1].push_back(partner(v, cp[1]));
      }
      for (VertexId v : x2) {
        targets[0].push_back(v);
        targets[2].push_back(partner(v, cp[2]));
      }
      for (VertexId v : x3) {
        targets[1].push_back(v);
        targets[2].push_back(partner(v, cp[2]));
      }
      Seq shared;
      for (std::size_t i = 0; i < specials.size(); ++i) {
        const Special& s = specials[i];
        const int opt = s.options[choice[i]];
        if (opt == kShared) {
          removed[s.host].push_back(s.v);
          shared.push_back(s.v);
        } else if (opt != kUnused && s.v != t[s.host]) {
          targets[s.host].push_back(s.v);
        }
      }
      aux("shared", shared);
      std::array<std::map<VertexId, Seq>, 3> fans;
      for (int h = 0; h < 3; ++h)
        fans[h] = fan(copies_view({cp[h]}).without(removed[h]), t[h],
                      targets[h]);

      PathStore store;
      for (VertexId v : x1)
        store.add(fans[0].at(v) + reversed(fans[1].at(partner(v, cp[1]))));
      for (VertexId v : x2)
        store.add(fans[0].at(v) + reversed(fans[2].at(partner(v, cp[2]))));
      for (VertexId v : x3)
        store.add(fans[1].at(v) + reversed(fans[2].at(partner(v, cp[2]))));
      for (std::size_t i = 0; i < specials.size(); ++i) {
        const Special& s = specials[i];
        const int opt = s.options[choice[i]];
        if (opt == kUnused) continue;
        if (opt == kShared) {
          store.add({t[s.owners[0]], s.v, t[s.owners[1]]});
          note("shared " + std::to_string(s.v));
          continue;
        }
        const int p = s.owners[opt];
        store.add(s.v == t[s.host] ? Seq{t[s.host], t[p]}
                                   : fans[s.host].at(s.v) + Seq{t[p]});
        note("special " + std::to_string(s.v) + " carries " +
             std::to_string(t[s.host]) + "-" + std::to_string(t[p]));
      }
      if (hi >= 0) {
        const VertexId from = hat[hi].front(), to = hat[hj].front();
        if (from == to)
          store.add({t[hi], from, t[hj]});
        else
          route_ports(hat_view, ports(t[hi], {from}), {{to, {t[hj]}}},
                      store);
      }
      return finish(store, t, CaseId::OddCase3_2);
    } catch (const Error& e) {
      if (e.code() != Errc::ConstructionFailed &&
          e.code() != Errc::InsufficientConnectivity)
        throw;
      last_error = e.what();
    }
  } while (advance());
  step_failed(last_error);
}

}  // namespace

namespace {

Construction run_route(const CayleyGraph& g,
                       const std::array<VertexId, 3>& omega,
                       const ConstructOptions& options) {
  Builder builder(g, omega, options);
  const CopyId ca = g.copy_of(omega[0]);
  const CopyId cb = g.copy_of(omega[1]);
  const CopyId cc = g.copy_of(omega[2]);
  if (ca == cb && cb == cc) return builder.same_copy();
  if (ca == cb || cb == cc || ca == cc) return builder.two_copies();
  return builder.three_copies();
}

}  // namespace

Construction construct_same_copy(const CayleyGraph& g,
                                 const std::array<VertexId, 3>& omega,
                                 const ConstructOptions& options) {
  validate(g, omega);
  if (g.n() % 2 == 0)
    throw Error(Errc::PreconditionFailed, "copy routes are for odd n");
  return Builder(g, omega, options).same_copy();
}

Construction construct_two_copies(const CayleyGraph& g,
                                  const std::array<VertexId, 3>& omega,
                                  const ConstructOptions& options) {
  validate(g, omega);
  if (g.n() % 2 == 0)
    throw Error(Errc::PreconditionFailed, "copy routes are for odd n");
  return Builder(g, omega, options).two_copies();
}

Construction construct_three_copies(const CayleyGraph& g,
                                    const std::array<VertexId, 3>& omega,
                                    const ConstructOptions& options) {
  validate(g, omega);
  if (g.n() % 2 == 0)
    throw Error(Errc::PreconditionFailed, "copy routes are for odd n");
  return Builder(g, omega, options).three_copies();
}

Construction build_structure(const CayleyGraph& g,
                             const std::array<VertexId, 3>& omega,
                             const ConstructOptions& options) {
  validate(g, omega);
  const StructureTarget target = StructureTarget::for_degree(g.n());
  const SubgraphView full = g.full_view();
  std::string reason;
  TripodStats stats;
  if (g.n() % 2 == 0) {
    const SubgraphView bss = full.restrict_labels(g.bubble_sort_star_labels());
    TripodOutcome outcome = solve_tripod(bss, omega, target, options.budget);
    stats = outcome.stats;
    if (outcome.ok() && verify_tripod(full, *outcome.structure, target).ok()) {
      Construction c;
      c.structure = std::move(*outcome.structure);
      c.trace.case_id = CaseId::Even;
      for (int i = 0; i < 3; ++i) c.trace.copies[i] = g.copy_of(omega[i]);
      c.stats = stats;
      c.strategy_path = {"even", "solver:" + to_string(outcome.strategy)};
      return c;
    }
    reason = "spanning bubble-sort star solve failed: " + outcome.diagnostic;
  } else {
    try {
      Construction c = run_route(g, omega, options);
      c.strategy_path = {to_string(c.trace.case_id)};
      return c;
    } catch (const Error& e) {
      if (e.code() != Errc::ConstructionFailed &&
          e.code() != Errc::InsufficientConnectivity)
        throw;
      reason = e.what();
    }
  }
  if (options.strict) throw Error(Errc::ConstructionFailed, reason);
  TripodOutcome outcome = solve_tripod(full, omega, target, options.budget);
  if (!outcome.ok())
    throw Error(Errc::ConstructionFailed,
                reason + "; generic solver: " + outcome.diagnostic);
  Construction c;
  c.structure = std::move(*outcome.structure);
  c.trace.case_id = CaseId::FallbackGeneric;
  c.trace.fallback_reason = reason;
  for (int i = 0; i < 3; ++i) c.trace.copies[i] = g.copy_of(omega[i]);
  c.stats = outcome.stats;
  c.strategy_path = {"dedicated-route-failed", "fallback-generic",
                     "solver:" + to_string(outcome.strategy)};
  return c;
}

}  // namespace cwpath
