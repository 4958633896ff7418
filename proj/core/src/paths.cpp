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

#include "cwpath/paths.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cwpath {

Path Path::reversed() const {
  return Path{std::vector<VertexId>(vertices.rbegin(), vertices.rend())};
}

void Verdict::merge(const Verdict& other) {
  violations.insert(violations.end(), other.violations.begin(),
                    other.violations.end());
}

std::string describe(const Path& path) {
  std::string out;
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(path.vertices[i]);
  }
  return out;
}

Verdict check_path(const SubgraphView& view, const Path& path) {
  Verdict verdict;
  if (path.vertices.empty()) {
    verdict.fail("empty path");
    return verdict;
  }
  std::set<VertexId> seen;
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    const VertexId v = path.vertices[i];
    if (!view.contains(v))
      verdict.fail("vertex " + std::to_string(v) + " outside the view in " +
                   describe(path));
    if (!seen.insert(v).second)
      verdict.fail("vertex " + std::to_string(v) + " repeated in " +
                   describe(path));
    if (i > 0 && !view.adjacent(path.vertices[i - 1], v))
      verdict.fail("non-edge " + std::to_string(path.vertices[i - 1]) + "-" +
                   std::to_string(v) + " in " + describe(path));
  }
  return verdict;
}

Verdict verify_path_family(const SubgraphView& view, const PathFamily& family,
                           std::span<const VertexId> terminals) {
  Verdict verdict;
  const std::set<VertexId> shared(terminals.begin(), terminals.end());
  const bool full = family.kind == Disjointness::PairwiseFullyDisjoint;
  std::map<VertexId, std::size_t> owner;
  std::map<std::pair<VertexId, VertexId>, std::size_t> edge_owner;
  for (std::size_t p = 0; p < family.paths.size(); ++p) {
    const Path& path = family.paths[p];
    verdict.merge(check_path(view, path));
    for (VertexId v : path.vertices) {
      if (!full && shared.count(v)) continue;
      auto [it, fresh] = owner.emplace(v, p);
      if (!fresh && it->second != p)
        verdict.fail("vertex " + std::to_string(v) + " shared by paths " +
                     std::to_string(it->second) + " and " + std::to_string(p));
    }
    for (std::size_t i = 1; i < path.vertices.size(); ++i) {
      auto e = std::minmax(path.vertices[i - 1], path.vertices[i]);
      auto [it, fresh] = edge_owner.emplace(e, p);
      if (!fresh && it->second != p)
        verdict.fail("edge " + std::to_string(e.first) + "-" +
                     std::to_string(e.second) + " shared by paths " +
                     std::to_string(it->second) + " and " + std::to_string(p));
    }
  }
  return verdict;
}

}  // namespace cwpath
