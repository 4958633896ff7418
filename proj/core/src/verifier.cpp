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


// Independent certificate checks. Adjacency is re-derived from permutations:
// two ranks are adjacent iff their one-line forms differ in exactly two
// positions (i, j) and (i j) is a generator of the family.

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "cwpath/certify.hpp"
#include "cwpath/error.hpp"
#include "cwpath/permutation.hpp"

namespace cwpath {

namespace {

constexpr std::array<const char*, 3> kPairNames{"ab", "ac", "bc"};
constexpr std::array<std::array<int, 2>, 3> kPairEnds{{{0, 1}, {0, 2}, {1, 2}}};

class Universe {
 public:
  Universe(int n, Family family)
      : n_(n), order_(factorial(n)), gens_(GeneratorSet::make(family, n)) {}

  bool in_range(VertexId v) const { return v < order_; }

  bool adjacent(VertexId u, VertexId v) const {
    if (!in_range(u) || !in_range(v) || u == v) return false;
    const Permutation pu = unrank(u, n_), pv = unrank(v, n_);
    int first = 0, second = 0, diff = 0;
    for (int i = 1; i <= n_; ++i) {
      if (pu(i) == pv(i)) continue;
      if (++diff > 2) return false;
      (diff == 1 ? first : second) = i;
    }
    return diff == 2 && gens_.index_of(Transposition(first, second)) >= 0;
  }

  int n() const { return n_; }

 private:
  int n_;
  VertexId order_;
  GeneratorSet gens_;
};

using Edge = std::pair<VertexId, VertexId>;

Edge edge(VertexId u, VertexId v) { return {std::min(u, v), std::max(u, v)}; }

std::string show(const VertexSeq& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i)
    out += (i ? "," : "") + std::to_string(s[i]);
  return out + "]";
}

// Simple path with valid ranks and edges; problems appended to `details`
// prefixed with `label`.
bool check_walk(const Universe& u, const VertexSeq& s, const std::string& label,
                std::vector<std::string>& details) {
  bool ok = true;
  if (s.empty()) {
    details.push_back(label + ": empty path");
    return false;
  }
  std::set<VertexId> seen;
  for (VertexId v : s) {
    if (!u.in_range(v)) {
      details.push_back(label + ": vertex " + std::to_string(v) +
                        " out of range");
      return false;
    }
    if (!seen.insert(v).second) {
      details.push_back(label + ": vertex " + std::to_string(v) + " repeats");
      ok = false;
    }
  }
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (!u.adjacent(s[i], s[i + 1])) {
      details.push_back(label + ": vertices " + std::to_string(s[i]) +
                        " and " + std::to_string(s[i + 1]) +
                        " are not adjacent");
      ok = false;
    }
  return ok;
}

std::array<int, 3> target_counts(int n) {
  const int d = n / 2;
  if (n % 2 == 0) return {2 * d - 2, 2 * d - 2, 2 * d - 2};
  return {2 * d - 2, 2 * d, 2 * d};
}

int best_pairing(int x, int y, int z) {
  int best = 0;
  for (int ma = 0; ma <= std::min(x, y); ++ma)
    for (int mb = 0; ma + mb <= x && mb <= z; ++mb) {
      const int mc = std::min(y - ma, z - mb);
      best = std::max(best, ma + mb + mc);
    }
  return best;
}

}  // namespace

VerdictReport verify_certificate(const Certificate& c) {
  VerdictReport report;
  // Checks hand out references into this vector; it must never reallocate.
  report.checks.reserve(16);
  const auto add = [&](std::string name) -> CheckResult& {
    report.checks.push_back({std::move(name), true, {}});
    return report.checks.back();
  };
  const auto fail = [](CheckResult& r, std::string why) {
    r.passed = false;
    r.details.push_back(std::move(why));
  };

  CheckResult& graph = add("graph");
  std::optional<Family> family;
  try {
    family = parse_family(c.family);
  } catch (const Error&) {
    fail(graph, "unknown family '" + c.family + "'");
  }
  if (family) {
    const int lo = *family == Family::Wheel ? 4 : kMinDegree;
    if (c.n < lo || c.n > kMaxDegree) {
      fail(graph, "n = " + std::to_string(c.n) + " outside [" +
                      std::to_string(lo) + ", " + std::to_string(kMaxDegree) +
                      "] for " + c.family);
      family.reset();
    }
  }
  if (!family) return report;
  const Universe u(c.n, *family);

  CheckResult& omega_check = add("omega");
  std::array<VertexId, 3> omega{};
  std::array<int, 3> copy_of{};
  for (int i = 0; i < 3; ++i) {
    try {
      const Permutation p = Permutation::parse(c.omega[i]);
      if (p.degree() != c.n) {
        fail(omega_check, "omega[" + std::to_string(i) + "] has degree " +
                              std::to_string(p.degree()));
        continue;
      }
      omega[i] = rank(p);
      copy_of[i] = p(c.n);
    } catch (const Error& e) {
      fail(omega_check, "omega[" + std::to_string(i) + "]: " + e.what());
    }
  }
  if (!omega_check.passed) return report;
  if (omega[0] == omega[1] || omega[0] == omega[2] || omega[1] == omega[2])
    fail(omega_check, "omega vertices are not distinct");
  const std::set<VertexId> terminals(omega.begin(), omega.end());

  CheckResult& trace = add("case-trace");
  {
    const std::string& id = c.case_trace.case_id;
    for (int i = 0; i < 3; ++i)
      if (c.case_trace.copies[i] != copy_of[i])
        fail(trace, "copy of terminal " + std::to_string(i) + " is " +
                        std::to_string(copy_of[i]) + ", trace says " +
                        std::to_string(c.case_trace.copies[i]));
    const std::set<int> copies(copy_of.begin(), copy_of.end());
    std::set<std::string> allowed{"fallback-generic"};
    if (c.n % 2 == 0)
      allowed.insert("even");
    else if (copies.size() == 1)
      allowed.insert({"odd-1.1", "odd-1.2.1", "odd-1.2.2"});
    else if (copies.size() == 2)
      allowed.insert("odd-2");
    else
      allowed.insert({"odd-3.1", "odd-3.2", "odd-3.3"});
    if (!allowed.count(id))
      fail(trace, "case '" + id + "' does not fit " +
                      std::to_string(copies.size()) + " distinct copies");
    if (c.case_trace.j && id != "odd-1.2.2")
      fail(trace, "j is only meaningful for odd-1.2.2");
  }

  // Bundles.
  CheckResult& bundle_paths = add("bundle-paths");
  CheckResult& bundle_disjoint = add("bundle-disjointness");
  std::map<VertexId, std::string> owner;
  std::map<Edge, std::string> edge_owner;
  for (int k = 0; k < 3; ++k) {
    const VertexId from = omega[kPairEnds[k][0]], to = omega[kPairEnds[k][1]];
    for (std::size_t i = 0; i < c.bundles[k].size(); ++i) {
      const VertexSeq& s = c.bundles[k][i];
      const std::string label =
          std::string("bundle ") + kPairNames[k] + " path " + std::to_string(i);
      if (!check_walk(u, s, label, bundle_paths.details)) {
        bundle_paths.passed = false;
        continue;
      }
      if (s.front() != from || s.back() != to || s.size() < 2) {
        fail(bundle_paths, label + ": runs " + show(s) + ", expected " +
                               std::to_string(from) + " to " +
                               std::to_string(to));
        continue;
      }
      for (std::size_t p = 1; p + 1 < s.size(); ++p) {
        if (terminals.count(s[p]))
          fail(bundle_paths, label + ": terminal " + std::to_string(s[p]) +
                                 " is internal");
        const auto [it, fresh] = owner.emplace(s[p], label);
        if (!fresh)
          fail(bundle_disjoint, "vertex " + std::to_string(s[p]) +
                                    " shared by " + it->second + " and " +
                                    label);
      }
      for (std::size_t p = 0; p + 1 < s.size(); ++p) {
        const auto [it, fresh] = edge_owner.emplace(edge(s[p], s[p + 1]), label);
        if (!fresh)
          fail(bundle_disjoint, "edge " + std::to_string(s[p]) + "-" +
                                    std::to_string(s[p + 1]) + " shared by " +
                                    it->second + " and " + label);
      }
    }
  }

  CheckResult& counts = add("bundle-counts");
  const std::array<int, 3> want = target_counts(c.n);
  std::array<int, 3> have{};
  for (int k = 0; k < 3; ++k) {
    have[k] = static_cast<int>(c.bundles[k].size());
    if (have[k] != want[k])
      fail(counts, std::string("bundle ") + kPairNames[k] + " has " +
                       std::to_string(have[k]) + " paths, target " +
                       std::to_string(want[k]));
  }

  // Omega-paths.
  CheckResult& paths = add("omega-paths");
  CheckResult& paths_disjoint = add("omega-path-disjointness");
  std::map<VertexId, std::size_t> path_owner;
  std::map<Edge, std::size_t> path_edge_owner;
  for (std::size_t i = 0; i < c.omega_paths.size(); ++i) {
    const VertexSeq& s = c.omega_paths[i];
    const std::string label = "omega-path " + std::to_string(i);
    if (!check_walk(u, s, label, paths.details)) {
      paths.passed = false;
      continue;
    }
    for (VertexId t : omega)
      if (std::find(s.begin(), s.end(), t) == s.end())
        fail(paths, label + ": misses terminal " + std::to_string(t));
    for (VertexId v : s) {
      if (terminals.count(v)) continue;
      const auto [it, fresh] = path_owner.emplace(v, i);
      if (!fresh)
        fail(paths_disjoint, "vertex " + std::to_string(v) + " shared by "
                             "omega-paths " + std::to_string(it->second) +
                                 " and " + std::to_string(i));
    }
    for (std::size_t p = 0; p + 1 < s.size(); ++p) {
      const auto [it, fresh] = path_edge_owner.emplace(edge(s[p], s[p + 1]), i);
      if (!fresh)
        fail(paths_disjoint, "edge " + std::to_string(s[p]) + "-" +
                                 std::to_string(s[p + 1]) +
                                 " shared by omega-paths " +
                                 std::to_string(it->second) + " and " +
                                 std::to_string(i));
    }
  }

  // Each omega-path splits at its middle terminal into two bundle paths,
  // each used once.
  CheckResult& composed = add("omega-paths-from-bundles");
  {
    std::map<VertexSeq, int> available;
    for (int k = 0; k < 3; ++k)
      for (const VertexSeq& s : c.bundles[k]) {
        VertexSeq key = s;
        if (key.back() < key.front()) std::reverse(key.begin(), key.end());
        ++available[key];
      }
    const auto take = [&](VertexSeq s) {
      if (s.back() < s.front()) std::reverse(s.begin(), s.end());
      auto it = available.find(s);
      if (it == available.end() || it->second == 0) return false;
      --it->second;
      return true;
    };
    for (std::size_t i = 0; i < c.omega_paths.size(); ++i) {
      const VertexSeq& s = c.omega_paths[i];
      const std::string label = "omega-path " + std::to_string(i);
      if (s.size() < 3 || !terminals.count(s.front()) ||
          !terminals.count(s.back())) {
        fail(composed, label + ": does not start and end at terminals");
        continue;
      }
      const auto mid = std::find_if(s.begin() + 1, s.end() - 1, [&](VertexId v) {
        return terminals.count(v) != 0;
      });
      if (mid == s.end() - 1) {
        fail(composed, label + ": no middle terminal");
        continue;
      }
      if (!take(VertexSeq(s.begin(), mid + 1)) ||
          !take(VertexSeq(mid, s.end())))
        fail(composed, label + ": halves are not unused bundle paths");
    }
  }

  CheckResult& pairing = add("pairing-count");
  {
    const int best = best_pairing(have[0], have[1], have[2]);
    if (static_cast<int>(c.omega_paths.size()) != best)
      fail(pairing, std::to_string(c.omega_paths.size()) +
                        " omega-paths, pairing maximum is " +
                        std::to_string(best));
  }

  if (c.pi3_report) {
    CheckResult& pi3 = add("pi3-report");
    const Pi3Summary& p = *c.pi3_report;
    const int formula = (6 * c.n - 9) / 4;
    const int k = *family == Family::Wheel ? 2 * c.n - 2 : 2 * c.n - 3;
    if (p.formula != formula)
      fail(pi3, "formula " + std::to_string(p.formula) + ", expected " +
                    std::to_string(formula));
    if (p.r < 0 || p.r > 3) fail(pi3, "r outside [0, 3]");
    if (p.upper != (3 * k - p.r) / 4)
      fail(pi3, "upper " + std::to_string(p.upper) + " does not equal floor((3*" +
                    std::to_string(k) + " - " + std::to_string(p.r) + ") / 4)");
    // The r-witness: count vertices adjacent to all three.
    const auto& w = p.r_witness;
    if (!u.in_range(w[0]) || !u.in_range(w[1]) || !u.in_range(w[2])) {
      fail(pi3, "r-witness out of range");
    } else {
      int common = 0;
      for (int i = 1; i <= c.n; ++i)
        for (int j = i + 1; j <= c.n; ++j) {
          const VertexId x = rank(apply_generator(unrank(w[0], c.n),
                                                  Transposition(i, j)));
          if (x != w[1] && x != w[2] && u.adjacent(x, w[0]) &&
              u.adjacent(x, w[1]) && u.adjacent(x, w[2]))
            ++common;
        }
      if (common != p.r)
        fail(pi3, "r-witness has " + std::to_string(common) +
                      " common neighbors, report says " + std::to_string(p.r));
    }
    std::array<VertexId, 3> lw = p.lower_witness, om = omega;
    std::sort(lw.begin(), lw.end());
    std::sort(om.begin(), om.end());
    if (lw != om) fail(pi3, "lower witness is not this certificate's omega");
    if (p.lower != static_cast<int>(c.omega_paths.size()))
      fail(pi3, "lower " + std::to_string(p.lower) + " but " +
                    std::to_string(c.omega_paths.size()) + " omega-paths");
    const bool match = p.lower == p.upper && p.upper == p.formula;
    if (p.verdict != (match ? "MATCH" : "MISMATCH"))
      fail(pi3, "verdict '" + p.verdict + "' contradicts the numbers");
  }

  CheckResult& producer = add("producer-checks");
  if (c.checks.empty()) fail(producer, "no producer checks recorded");
  for (const CertificateCheck& ch : c.checks)
    if (!ch.passed) fail(producer, "producer check '" + ch.name + "' failed");
  return report;
}

}  // namespace cwpath
