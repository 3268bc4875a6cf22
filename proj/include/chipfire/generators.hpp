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

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "chipfire/constructions.hpp"
#include "chipfire/multigraph.hpp"

namespace chipfire::gen {

inline Multigraph path(std::size_t m) {
  if (m == 0) throw ValidationError("path needs at least one vertex");
  std::vector<EdgeSpec> edges;
  for (Vertex v = 0; v + 1 < m; ++v) edges.push_back({v, v + 1, 1});
  return Multigraph::from_edge_list(m, edges);
}

// cycle(2) is the doubled edge C_2.
inline Multigraph cycle(std::size_t m) {
  if (m < 2) throw ValidationError("cycle needs at least two vertices");
  std::vector<EdgeSpec> edges;
  for (Vertex v = 0; v < m; ++v) edges.push_back({v, (v + 1) % m, 1});
  return Multigraph::from_edge_list(m, edges);
}

inline Multigraph complete(std::size_t n) {
  if (n == 0) throw ValidationError("complete graph needs a vertex");
  std::vector<EdgeSpec> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, 1});
  return Multigraph::from_edge_list(n, edges);
}

// Parts occupy consecutive vertex ranges in the given order.
inline Multigraph complete_multipartite(const std::vector<std::size_t>& parts) {
  if (parts.empty()) throw ValidationError("need at least one part");
  std::vector<std::size_t> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) throw ValidationError("parts must be nonempty");
    part_of.insert(part_of.end(), parts[i], i);
  }
  std::vector<EdgeSpec> edges;
  for (Vertex u = 0; u < part_of.size(); ++u)
    for (Vertex v = u + 1; v < part_of.size(); ++v)
      if (part_of[u] != part_of[v]) edges.push_back({u, v, 1});
  return Multigraph::from_edge_list(part_of.size(), edges);
}

inline Multigraph complete_bipartite(std::size_t m, std::size_t n) {
  return complete_multipartite({m, n});
}

// Q_d = K_2 x ... x K_2; Q_0 is a single vertex.
inline Multigraph hypercube(std::size_t d) {
  Multigraph q(1);
  for (std::size_t i = 0; i < d; ++i) q = cartesian_product(q, path(2));
  return q;
}

// P_{d1} x P_{d2} x ...
inline Multigraph grid(const std::vector<std::size_t>& dims) {
  if (dims.empty()) throw ValidationError("grid needs at least one dimension");
  Multigraph g = path(dims[0]);
  for (std::size_t i = 1; i < dims.size(); ++i)
    g = cartesian_product(g, path(dims[i]));
  return g;
}

// Star on m vertices: centre 0 joined to leaves 1..m-1.
inline Multigraph star(std::size_t m) {
  if (m == 0) throw ValidationError("star needs at least one vertex");
  std::vector<EdgeSpec> edges;
  for (Vertex v = 1; v < m; ++v) edges.push_back({0, v, 1});
  return Multigraph::from_edge_list(m, edges);
}

// Uniform labelled tree on m vertices via a random Pruefer sequence.
inline Multigraph random_tree(std::size_t m, std::uint64_t seed) {
  if (m == 0) throw ValidationError("tree needs at least one vertex");
  if (m <= 2) return path(m);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  std::vector<std::size_t> code(m - 2);
  for (auto& c : code) c = pick(rng);
  std::vector<std::size_t> degree(m, 1);
  for (auto c : code) ++degree[c];
  std::vector<EdgeSpec> edges;
  for (auto c : code) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.push_back({leaf, c, 1});
    --degree[leaf];
    --degree[c];
  }
  Vertex a = m, b = m;
  for (Vertex v = 0; v < m; ++v)
    if (degree[v] == 1) (a == m ? a : b) = v;
  edges.push_back({a, b, 1});
  return Multigraph::from_edge_list(m, edges);
}

// Erdos-Renyi G(n, p): each pair joined independently with probability p.
inline Multigraph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (n == 0) throw ValidationError("graph needs at least one vertex");
  if (!(p >= 0.0 && p <= 1.0))
    throw ValidationError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<EdgeSpec> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v, 1});
  return Multigraph::from_edge_list(n, edges);
}

}  // namespace chipfire::gen
