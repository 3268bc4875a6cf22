// Copyright 2026 The chipfire Authors
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

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chipfire/invariants.hpp"
#include "chipfire/multigraph.hpp"

namespace chipfire {

// Vertex (u, w) of G x H is u * |V(H)| + w.
struct ProductLayout {
  std::size_t g_size;
  std::size_t h_size;

  Vertex vertex(Vertex u, Vertex w) const {
    if (u >= g_size || w >= h_size)
      throw ValidationError("product coordinate out of range");
    return u * h_size + w;
  }
  Vertex g_coord(Vertex x) const { return x / h_size; }
  Vertex h_coord(Vertex x) const { return x % h_size; }
  std::size_t size() const { return g_size * h_size; }
};

enum class Factor { kG, kH };

inline Multigraph cartesian_product(const Multigraph& g, const Multigraph& h) {
  const ProductLayout lay{g.vertex_count(), h.vertex_count()};
  std::vector<EdgeSpec> edges;
  for (Vertex u = 0; u < lay.g_size; ++u)
    for (const auto& e : h.edges())
      edges.push_back({lay.vertex(u, e.u), lay.vertex(u, e.v), e.count});
  for (Vertex w = 0; w < lay.h_size; ++w)
    for (const auto& e : g.edges())
      edges.push_back({lay.vertex(e.u, w), lay.vertex(e.v, w), e.count});
  return Multigraph::from_edge_list(lay.size(), edges);
}

// Canonical copy of the named factor through `index`, a vertex of the other
// factor: kG gives G x {index}, kH gives {index} x H.
inline VertexSet canonical_copy(const ProductLayout& lay, Factor which,
                                Vertex index) {
  VertexSet out(lay.size());
  if (which == Factor::kG) {
    if (index >= lay.h_size)
      throw ValidationError("canonical copy index out of range");
    for (Vertex u = 0; u < lay.g_size; ++u) out.insert(lay.vertex(u, index));
  } else {
    if (index >= lay.g_size)
      throw ValidationError("canonical copy index out of range");
    for (Vertex w = 0; w < lay.h_size; ++w) out.insert(lay.vertex(index, w));
  }
  return out;
}

// Adds `extra` vertices n..n+extra-1, each joined once to every other
// vertex, old and new.
inline Multigraph cone(const Multigraph& g, std::size_t extra) {
  const std::size_t n = g.vertex_count();
  auto edges = g.edges();
  for (Vertex a = n; a < n + extra; ++a)
    for (Vertex b = 0; b < a; ++b) edges.push_back({b, a, 1});
  return Multigraph::from_edge_list(n + extra, edges);
}

// Replaces every edge (each parallel copy separately) by a path of length
// two through a new vertex.
inline Multigraph subdivide(const Multigraph& g) {
  std::vector<EdgeSpec> edges;
  Vertex next = g.vertex_count();
  for (const auto& e : g.edges())
    for (Multiplicity k = 0; k < e.count; ++k) {
      edges.push_back({e.u, next, 1});
      edges.push_back({next, e.v, 1});
      ++next;
    }
  return Multigraph::from_edge_list(next, edges);
}

namespace detail {

// A vertex of valence two whose edges lead to two distinct neighbours.
inline std::optional<Vertex> smoothable_vertex(const Multigraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.valence(v) == 2 && g.neighbors(v).size() == 2) return v;
  return std::nullopt;
}

}  // namespace detail

// Suppresses 2-valent vertices until none with two distinct neighbours
// remains. A cycle ends as C_2, a path as K_2. Surviving vertices keep their
// relative order.
inline Multigraph smooth_two_valent(const Multigraph& g) {
  if (!is_connected(g))
    throw ValidationError("smoothing requires a connected graph");
  Multigraph cur = g;
  while (auto v = detail::smoothable_vertex(cur)) {
    const auto& nb = cur.neighbors(*v);
    const Vertex a = nb[0].vertex, b = nb[1].vertex;
    auto edges = cur.edges();
    std::erase_if(edges, [&](const EdgeSpec& e) {
      return e.u == *v || e.v == *v;
    });
    edges.push_back({std::min(a, b), std::max(a, b), 1});
    for (auto& e : edges) {
      if (e.u > *v) --e.u;
      if (e.v > *v) --e.v;
    }
    cur = Multigraph::from_edge_list(cur.vertex_count() - 1, edges);
  }
  return cur;
}

}  // namespace chipfire
