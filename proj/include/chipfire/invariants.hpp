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
#include <vector>

#include "chipfire/flow.hpp"
#include "chipfire/multigraph.hpp"

namespace chipfire {

inline std::uint64_t min_degree(const Multigraph& g) {
  std::uint64_t d = g.valence(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v) d = std::min(d, g.valence(v));
  return d;
}

inline std::uint64_t max_degree(const Multigraph& g) {
  std::uint64_t d = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.valence(v));
  return d;
}

// Vertices reachable from `start` without leaving `within`.
inline VertexSet reachable(const Multigraph& g, Vertex start,
                           const VertexSet& within) {
  VertexSet seen(g.vertex_count());
  if (!within.contains(start)) return seen;
  std::vector<Vertex> stack{start};
  seen.insert(start);
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (const auto& nb : g.neighbors(u))
      if (within.contains(nb.vertex) && !seen.contains(nb.vertex)) {
        seen.insert(nb.vertex);
        stack.push_back(nb.vertex);
      }
  }
  return seen;
}

// Connected components, each as a vertex set, ordered by smallest member.
inline std::vector<VertexSet> components(const Multigraph& g) {
  std::vector<VertexSet> out;
  VertexSet left = VertexSet::full(g.vertex_count());
  while (!left.empty()) {
    auto comp = reachable(g, left.first(), left);
    left -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Multigraph& g) {
  return reachable(g, 0, VertexSet::full(g.vertex_count())).is_full();
}

// Nonempty and inducing a connected subgraph.
inline bool is_connected_subset(const Multigraph& g, const VertexSet& a) {
  if (a.host_size() != g.vertex_count())
    throw ValidationError("vertex set host does not match graph");
  if (a.empty()) return false;
  return reachable(g, a.first(), a) == a;
}

// |E(A, A^C)| counted with multiplicity. A must be a proper nonempty subset.
inline std::uint64_t edge_boundary(const Multigraph& g, const VertexSet& a) {
  if (a.host_size() != g.vertex_count())
    throw ValidationError("vertex set host does not match graph");
  if (a.empty() || a.is_full())
    throw ValidationError("edge boundary needs a proper nonempty subset");
  std::uint64_t total = 0;
  a.for_each([&](Vertex u) {
    for (const auto& nb : g.neighbors(u))
      if (!a.contains(nb.vertex)) total += nb.count;
  });
  return total;
}

// Global minimum edge cut. Zero for disconnected graphs and for a single
// vertex.
inline std::uint64_t edge_connectivity(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 1 || !is_connected(g)) return 0;
  std::int64_t best = FlowNetwork::kInfinite;
  const VertexSet src(n, {0});
  for (Vertex t = 1; t < n; ++t)
    best = std::min(best, min_edge_cut(g, src, VertexSet(n, {t})).size);
  return static_cast<std::uint64_t>(best);
}

// Smallest vertex cut; n-1 when every pair is adjacent, 0 when disconnected.
inline std::uint64_t vertex_connectivity(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 1 || !is_connected(g)) return 0;
  std::int64_t best = static_cast<std::int64_t>(n - 1);
  for (Vertex s = 0; s < n; ++s)
    for (Vertex t = s + 1; t < n; ++t)
      if (!g.adjacent(s, t))
        best = std::min(best, local_vertex_connectivity(g, s, t));
  return static_cast<std::uint64_t>(best);
}

// Edges whose removal increases the number of components. Only
// multiplicity-one edges can qualify.
inline std::vector<EdgeSpec> bridges(const Multigraph& g) {
  std::vector<EdgeSpec> out;
  const auto edges = g.edges();
  for (const auto& e : edges) {
    if (e.count != 1) continue;
    // e is a bridge iff v is unreachable from u once e is gone.
    std::vector<EdgeSpec> rest;
    rest.reserve(edges.size());
    for (const auto& f : edges)
      if (!(f.u == e.u && f.v == e.v)) rest.push_back(f);
    const auto h = Multigraph::from_edge_list(g.vertex_count(), rest);
    if (!reachable(h, e.u, VertexSet::full(g.vertex_count())).contains(e.v))
      out.push_back(e);
  }
  return out;
}

// First Betti number |E| - |V| + (#components).
inline std::int64_t cycle_rank(const Multigraph& g) {
  return static_cast<std::int64_t>(g.edge_count()) -
         static_cast<std::int64_t>(g.vertex_count()) +
         static_cast<std::int64_t>(components(g).size());
}

inline bool is_tree(const Multigraph& g) {
  return is_connected(g) && g.edge_count() + 1 == g.vertex_count();
}

// C_m for m >= 2; C_2 is a doubled edge.
inline bool is_cycle(const Multigraph& g) {
  const auto n = g.vertex_count();
  if (n < 2 || !is_connected(g) || g.edge_count() != n) return false;
  for (Vertex v = 0; v < n; ++v)
    if (g.valence(v) != 2) return false;
  return true;
}

inline bool is_complete(const Multigraph& g) {
  const auto n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (g.multiplicity(u, v) != 1) return false;
  return true;
}

// Part sizes (smaller first) if g is a simple complete bipartite graph
// K_{m,n} with m, n >= 1.
inline std::optional<std::pair<std::size_t, std::size_t>>
complete_bipartite_parts(const Multigraph& g) {
  const auto n = g.vertex_count();
  if (n < 2 || !g.is_simple()) return std::nullopt;
  VertexSet side(n);
  side.insert(0);
  for (Vertex v = 1; v < n; ++v)
    if (!g.adjacent(0, v)) side.insert(v);
  const std::size_t a = side.size(), b = n - a;
  if (b == 0) return std::nullopt;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != (side.contains(u) != side.contains(v)))
        return std::nullopt;
  return std::make_pair(std::min(a, b), std::max(a, b));
}

namespace detail {

inline void mis_search(const std::vector<VertexSet>& nbrs, VertexSet live,
                       std::size_t chosen, std::size_t& best) {
  while (true) {
    if (chosen + live.size() <= best) return;
    if (live.empty()) {
      best = chosen;
      return;
    }
    // Vertices of live-degree <= 1 belong to some maximum independent set.
    Vertex pick = live.host_size();
    std::size_t pick_deg = 0;
    bool forced = false;
    live.for_each([&](Vertex v) {
      if (forced) return;
      const std::size_t d = (nbrs[v] & live).size();
      if (d <= 1) {
        pick = v;
        forced = true;
      } else if (pick == live.host_size() || d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    });
    if (forced) {
      live -= nbrs[pick];
      live.erase(pick);
      ++chosen;
      continue;
    }
    // Branch: take `pick`, or drop it.
    VertexSet with = live - nbrs[pick];
    with.erase(pick);
    mis_search(nbrs, std::move(with), chosen + 1, best);
    live.erase(pick);
  }
}

}  // namespace detail

// Exact independence number; multiplicities are ignored.
inline std::size_t independence_number(const Multigraph& g) {
  const auto n = g.vertex_count();
  std::vector<VertexSet> nbrs(n, VertexSet(n));
  for (Vertex v = 0; v < n; ++v)
    for (const auto& nb : g.neighbors(v)) nbrs[v].insert(nb.vertex);
  std::size_t best = 0;
  detail::mis_search(nbrs, VertexSet::full(n), 0, best);
  return best;
}

}  // namespace chipfire
