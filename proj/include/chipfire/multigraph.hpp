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

#include <cstddef>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "chipfire/errors.hpp"
#include "chipfire/vertex_set.hpp"

namespace chipfire {

using Multiplicity = std::uint32_t;

struct EdgeSpec {
  Vertex u;
  Vertex v;
  Multiplicity count = 1;
  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

// Loopless multigraph on vertices 0..n-1, stored as a symmetric dense
// multiplicity matrix plus per-vertex neighbour lists. Immutable once built.
class Multigraph {
 public:
  struct Neighbor {
    Vertex vertex;
    Multiplicity count;
  };

  Multigraph() : Multigraph(1) {}
  explicit Multigraph(std::size_t n) : n_(n), mult_(n * n, 0) {
    if (n == 0) throw ValidationError("a graph needs at least one vertex");
    finalize();
  }

  // Repeated (u, v) pairs accumulate.
  static Multigraph from_edge_list(std::size_t n,
                                   const std::vector<EdgeSpec>& edges) {
    Multigraph g(n);
    for (const auto& e : edges) g.add(e.u, e.v, e.count);
    g.finalize();
    return g;
  }

  // Dense symmetric matrix with zero diagonal.
  static Multigraph from_matrix(std::size_t n,
                                const std::vector<Multiplicity>& mult) {
    if (mult.size() != n * n)
      throw ValidationError("multiplicity matrix has wrong size");
    Multigraph g(n);
    for (Vertex u = 0; u < n; ++u) {
      if (mult[u * n + u] != 0) throw ValidationError("loop at vertex " +
                                                      std::to_string(u));
      for (Vertex v = u + 1; v < n; ++v) {
        if (mult[u * n + v] != mult[v * n + u])
          throw ValidationError("multiplicity matrix is not symmetric");
        if (mult[u * n + v]) g.add(u, v, mult[u * n + v]);
      }
    }
    g.finalize();
    return g;
  }

  std::size_t vertex_count() const { return n_; }
  std::uint64_t edge_count() const { return edges_; }

  Multiplicity multiplicity(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return mult_[u * n_ + v];
  }
  bool adjacent(Vertex u, Vertex v) const { return multiplicity(u, v) > 0; }

  // Number of edge ends at v, counting multiplicity.
  std::uint64_t valence(Vertex v) const {
    check(v);
    return valence_[v];
  }
  const std::vector<Neighbor>& neighbors(Vertex v) const {
    check(v);
    return adj_[v];
  }

  bool is_simple() const {
    for (auto m : mult_)
      if (m > 1) return false;
    return true;
  }

  // Sorted u < v edge list with accumulated multiplicities.
  std::vector<EdgeSpec> edges() const {
    std::vector<EdgeSpec> out;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (auto m = mult_[u * n_ + v]) out.push_back({u, v, m});
    return out;
  }

  // Subgraph induced by `keep`, vertices renumbered in increasing order.
  Multigraph induced(const VertexSet& keep) const {
    if (keep.host_size() != n_) throw ValidationError("host size mismatch");
    const auto vs = keep.members();
    if (vs.empty()) throw ValidationError("induced subgraph on empty set");
    Multigraph g(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (auto m = mult_[vs[i] * n_ + vs[j]]) g.add(i, j, m);
    g.finalize();
    return g;
  }

  // Same vertex set with every multiplicity scaled by `factor` (>= 1).
  Multigraph scaled(Multiplicity factor) const {
    if (factor == 0) throw ValidationError("scale factor must be positive");
    Multigraph g(n_);
    for (const auto& e : edges()) g.add(e.u, e.v, e.count * factor);
    g.finalize();
    return g;
  }

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.n_ == b.n_ && a.mult_ == b.mult_;
  }

 private:
  void check(Vertex v) const {
    if (v >= n_)
      throw ValidationError("vertex " + std::to_string(v) +
                            " out of range for graph on " +
                            std::to_string(n_) + " vertices");
  }
  void add(Vertex u, Vertex v, Multiplicity m) {
    check(u);
    check(v);
    if (u == v) throw ValidationError("loop edge at vertex " +
                                      std::to_string(u));
    if (m < 1) throw ValidationError("edge multiplicity must be at least 1");
    mult_[u * n_ + v] += m;
    mult_[v * n_ + u] += m;
  }
  void finalize() {
    adj_.assign(n_, {});
    valence_.assign(n_, 0);
    edges_ = 0;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = 0; v < n_; ++v)
        if (auto m = mult_[u * n_ + v]) {
          adj_[u].push_back({v, m});
          valence_[u] += m;
          if (u < v) edges_ += m;
        }
  }

  std::size_t n_;
  std::vector<Multiplicity> mult_;
  std::vector<std::vector<Neighbor>> adj_;
  std::vector<std::uint64_t> valence_;
  std::uint64_t edges_ = 0;
};

}  // namespace chipfire
