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

#ifndef CWPATH_PATHS_HPP_
#define CWPATH_PATHS_HPP_

#include <span>
#include <string>
#include <vector>

#include "cwpath/graph.hpp"

namespace cwpath {

struct Path {
  std::vector<VertexId> vertices;

  std::size_t length() const noexcept {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }
  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
  Path reversed() const;

  friend bool operator==(const Path&, const Path&) = default;
};

enum class Disjointness {
  // Paths share only declared terminal vertices and no edges.
  PairwiseInternallyDisjoint,
  // Paths share no vertex at all.
  PairwiseFullyDisjoint,
};

struct PathFamily {
  std::vector<Path> paths;
  Disjointness kind = Disjointness::PairwiseInternallyDisjoint;

  std::size_t size() const noexcept { return paths.size(); }
};

// Accumulates every violation found by a checker rather than stopping at the
// first one.
struct Verdict {
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
  void fail(std::string message) { violations.push_back(std::move(message)); }
  void merge(const Verdict& other);
};

std::string describe(const Path& path);

// Non-empty, simple, and every consecutive pair adjacent inside `view`.
Verdict check_path(const SubgraphView& view, const Path& path);

// Independent check of a family against its declared disjointness. For
// internally disjoint families, `terminals` lists the vertices paths may
// share.
Verdict verify_path_family(const SubgraphView& view, const PathFamily& family,
                           std::span<const VertexId> terminals = {});

}  // namespace cwpath

#endif  // CWPATH_PATHS_HPP_
