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

#include "cwpath/topology.hpp"

#include <algorithm>
#include <sstream>

#include "cwpath/error.hpp"

namespace cwpath {
namespace {

void check_copy(const CayleyGraph& g, CopyId copy) {
  if (copy.value < 1 || copy.value > g.n()) {
    throw Error(Errc::InvalidCopy, "copy " + std::to_string(copy.value) +
                                       " is outside [1," +
                                       std::to_string(g.n()) + "]");
  }
}

std::vector<std::uint8_t> copy_mask(const CayleyGraph& g,
                                    std::span<const CopyId> copies) {
  if (copies.empty()) throw Error(Errc::EmptyCopySet, "empty copy set");
  std::vector<std::uint8_t> selected(static_cast<std::size_t>(g.n()) + 1, 0);
  for (CopyId c : copies) {
    check_copy(g, c);
    selected[c.value] = 1;
  }
  std::vector<std::uint8_t> mask(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    mask[v] = selected[g.copy_of(v).value];
  return mask;
}

}  // namespace

CayleyGraph CayleyGraph::build(int n, Family family) {
  CayleyGraph g;
  g.generators_ = GeneratorSet::make(family, n);
  g.n_ = n;
  const VertexId count = factorial(n);
  g.perms_.reserve(count);
  for (VertexId v = 0; v < count; ++v) g.perms_.push_back(unrank(v, n));
  g.graph_ = Graph(count);
  for (VertexId v = 0; v < count; ++v) {
    for (int s = 0; s < g.generators_.size(); ++s) {
      const VertexId w =
          rank(apply_generator(g.perms_[v], g.generators_.members[s]));
      if (v < w) g.graph_.add_edge(v, w, static_cast<std::uint8_t>(s));
    }
  }
  return g;
}

VertexId CayleyGraph::vertex(const Permutation& sigma) const {
  if (sigma.degree() != n_) {
    throw Error(Errc::DegreeMismatch,
                "permutation of degree " + std::to_string(sigma.degree()) +
                    " in a graph of degree " + std::to_string(n_));
  }
  return rank(sigma);
}

std::vector<VertexId> CayleyGraph::copy_members(CopyId copy) const {
  check_copy(*this, copy);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (copy_of(v) == copy) out.push_back(v);
  return out;
}

VertexId CayleyGraph::neighbor_via(VertexId v, Transposition t) const {
  return rank(apply_generator(perms_[v], t));
}

OutsideNeighbors CayleyGraph::outside_neighbors(VertexId v) const {
  if (family() != Family::Wheel) {
    throw Error(Errc::WrongFamily,
                "outside neighbors are defined for the wheel family only");
  }
  return OutsideNeighbors{neighbor_via(v, Transposition(1, n_)),
                          neighbor_via(v, Transposition(n_ - 1, n_)),
                          neighbor_via(v, Transposition(2, n_))};
}

std::uint32_t CayleyGraph::bubble_sort_star_labels() const {
  std::uint32_t mask = 0;
  const auto bss = GeneratorSet::make(Family::BubbleSortStar, n_);
  for (const auto& t : bss.members)
    mask |= std::uint32_t{1} << generators_.index_of(t);
  return mask;
}

VertexId CayleyGraph::left_translate(const Permutation& h, VertexId v) const {
  return rank(compose(h, perms_[v]));
}

std::vector<std::pair<VertexId, VertexId>> cross_edges(const CayleyGraph& g,
                                                       CopyId i, CopyId j) {
  check_copy(g, i);
  check_copy(g, j);
  if (i == j) {
    throw Error(Errc::SameCopy, "cross edges need two distinct copies (got " +
                                    std::to_string(i.value) + " twice)");
  }
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (g.copy_of(u) != i) continue;
    for (const Arc& arc : g.graph().arcs(u))
      if (g.copy_of(arc.to) == j) out.emplace_back(u, arc.to);
  }
  return out;
}

SubgraphView copy_union(const CayleyGraph& g, std::span<const CopyId> copies) {
  return SubgraphView(g.graph(), copy_mask(g, copies));
}

SubgraphView delete_copies(const CayleyGraph& g,
                           std::span<const CopyId> copies) {
  auto mask = copy_mask(g, copies);
  for (auto& m : mask) m = static_cast<std::uint8_t>(!m);
  return SubgraphView(g.graph(), std::move(mask));
}

std::vector<VertexId> common_neighbors(const SubgraphView& view,
                                       std::span<const VertexId> vertices) {
  if (vertices.size() < 2 || vertices.size() > 3) {
    throw Error(Errc::PreconditionFailed,
                "common_neighbors takes two or three vertices");
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!view.contains(vertices[i]))
      throw Error(Errc::VertexNotInView, "vertex outside the view");
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j])
        throw Error(Errc::DuplicateVertex,
                    "duplicate vertex " + std::to_string(vertices[i]));
  }
  std::vector<VertexId> out = view.neighbors(vertices[0]);
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    std::erase_if(out, [&](VertexId w) {
      return !view.adjacent(vertices[i], w);
    });
  }
  return out;
}

std::array<VertexId, 3> canonical_triple(const CayleyGraph& g,
                                         std::array<VertexId, 3> triple) {
  std::array<VertexId, 3> best{~VertexId{0}, 0, 0};
  for (VertexId anchor : triple) {
    const Permutation h = g.permutation(anchor).inverse();
    std::array<VertexId, 3> t{};
    for (int k = 0; k < 3; ++k) t[k] = g.left_translate(h, triple[k]);
    std::sort(t.begin(), t.end());
    best = std::min(best, t);
  }
  return best;
}

std::string to_dot(const CayleyGraph& g) {
  std::ostringstream out;
  out << "graph " << (g.family() == Family::Wheel ? "CW" : "BS") << g.n()
      << " {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    out << "  " << v << " [label=\"" << g.permutation(v).to_string()
        << "\"];\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (const Arc& arc : g.graph().arcs(v)) {
      if (arc.to < v) continue;
      out << "  " << v << " -- " << arc.to << " [gen=\""
          << g.generators().members[arc.label].to_string() << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_edge_list(const CayleyGraph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << family_name(g.family()) << '\n';
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (const Arc& arc : g.graph().arcs(v)) {
      if (arc.to < v) continue;
      out << v << ' ' << arc.to << ' '
          << g.generators().members[arc.label].to_string() << '\n';
    }
  }
  return out.str();
}

}  // namespace cwpath
