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

#include <string>
#include <vector>

#include "chipfire/constructions.hpp"
#include "chipfire/divisor.hpp"
#include "chipfire/generators.hpp"
#include "chipfire/multigraph.hpp"
#include "chipfire/scramble.hpp"

// Small hand-built graphs: the labelled cube, the slashed diamond and its
// two wedge sums, a lift pair (G obtained from H by two lifts) whose
// scramble numbers go the wrong way, a tree-times-graph product whose
// scramble number falls short of its gonality, and two graphs where
// min-degree n/2 is not enough for sn = gon = n - alpha.
namespace chipfire::fixtures {

// Cube with inner face s t u v, outer face w x y z and spokes s-w, t-x,
// u-y, v-z.
namespace cube_label {
inline constexpr Vertex s = 0, t = 1, u = 2, v = 3, w = 4, x = 5, y = 6, z = 7;
}

inline Multigraph cube() {
  using namespace cube_label;
  return Multigraph::from_edge_list(8, {{s, t}, {t, u}, {u, v}, {v, s},
                                        {w, x}, {x, y}, {y, z}, {z, w},
                                        {s, w}, {t, x}, {u, y}, {v, z}});
}

// Four disjoint spokes.
inline Scramble cube_scramble() {
  using namespace cube_label;
  return Scramble(cube(), {VertexSet(8, {s, w}), VertexSet(8, {t, x}),
                           VertexSet(8, {u, y}), VertexSet(8, {v, z})});
}

// (s) + (t) + (u) + (v)
inline Divisor cube_divisor() {
  using namespace cube_label;
  Divisor d(8);
  for (Vertex q : {s, t, u, v}) d[q] = 1;
  return d;
}

// K4 minus an edge: 0 and 3 have valence 2, the chord is 1-2.
inline Multigraph slashed_diamond() {
  return Multigraph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
}

namespace detail {

// Two diamonds glued at vertex `a` of the first and `b` of the second.
// The glued vertex is 0; the first copy's other vertices are 1-3, the
// second's 4-6.
inline Multigraph diamond_wedge(Vertex a, Vertex b) {
  const auto d = slashed_diamond();
  std::vector<Vertex> left(4), right(4);
  Vertex next = 1;
  for (Vertex i = 0; i < 4; ++i) left[i] = i == a ? 0 : next++;
  for (Vertex i = 0; i < 4; ++i) right[i] = i == b ? 0 : next++;
  std::vector<EdgeSpec> edges;
  for (const auto& e : d.edges()) {
    edges.push_back({left[e.u], left[e.v], e.count});
    edges.push_back({right[e.u], right[e.v], e.count});
  }
  return Multigraph::from_edge_list(7, edges);
}

}  // namespace detail

// Glued at a 2-valent vertex of each copy.
inline Multigraph diamond_wedge_low() { return detail::diamond_wedge(0, 0); }

// Glued at a 3-valent vertex of each copy.
inline Multigraph diamond_wedge_high() { return detail::diamond_wedge(1, 1); }

// Each copy minus the glue vertex, and the glue vertex alone.
inline Scramble diamond_wedge_high_scramble() {
  return Scramble(diamond_wedge_high(),
                  {VertexSet(7, {1, 2, 3}), VertexSet(7, {4, 5, 6}), VertexSet(7, {0})});
}

namespace lift_label {
inline constexpr Vertex a = 0, b = 1, c = 2, d = 3, e = 4, f = 5;
}

// The larger graph of the lift pair. a, b hang off c; e, f hang off d; the
// c-d bundle carries three edges so that {a,b,c} is a 3-edge cut while
// {a,b} and {e,f} are 2-edge cuts.
inline Multigraph lift_pair_h() {
  using namespace lift_label;
  return Multigraph::from_edge_list(6, {{a, b, 2}, {a, c}, {b, c}, {c, d, 3},
                                        {d, e}, {d, f}, {e, f, 2}});
}

// lift_pair_h with one c-d edge removed; (a) + (b) has rank 1 there.
inline Multigraph lift_pair_h_minus() {
  using namespace lift_label;
  return Multigraph::from_edge_list(6, {{a, b, 2}, {a, c}, {b, c}, {c, d, 2},
                                        {d, e}, {d, f}, {e, f, 2}});
}

// Lift at c along a-c-d, then at d along a-d-e.
inline Multigraph lift_pair_g() {
  using namespace lift_label;
  return Multigraph::from_edge_list(6, {{a, b, 2}, {b, c}, {c, d, 2}, {a, e},
                                        {d, f}, {e, f, 2}});
}

inline Scramble lift_pair_g_scramble() {
  using namespace lift_label;
  return Scramble(lift_pair_g(),
                  {VertexSet(6, {a, e}), VertexSet(6, {b, c}), VertexSet(6, {d, f})});
}

// (a) + (b)
inline Divisor lift_pair_divisor() {
  Divisor d(6);
  d[lift_label::a] = d[lift_label::b] = 1;
  return d;
}

// H = doubled edge h0-h1, bridge h1-h2, leaf h3 on h2.
inline Multigraph short_tree() { return gen::path(2); }

inline Multigraph bridged_digon() {
  return Multigraph::from_edge_list(4, {{0, 1, 2}, {1, 2}, {2, 3}});
}

inline Multigraph short_tree_product() {
  return cartesian_product(short_tree(), bridged_digon());
}

// Smoothing of short_tree_product: the two leaf-rung vertices disappear and
// their path becomes a second y-z edge. u, v, w, x are the digon-rung
// vertices, y and z the bridge end.
namespace smoothed_label {
inline constexpr Vertex u = 0, v = 1, y = 2, w = 3, x = 4, z = 5;
}

inline Multigraph short_tree_product_smoothed() {
  return smooth_two_valent(short_tree_product());
}

// K3 x K2: n = 6, min degree 3 = n/2, gon 3 < n - alpha = 4.
inline Multigraph rook_sharpness() {
  return cartesian_product(gen::complete(3), gen::complete(2));
}

// K2 x K2 with one more vertex adjacent to the copy {0, 2}: n = 5,
// min degree 2, gon 2 < n - alpha = 3.
inline Multigraph odd_sharpness() {
  auto sq = cartesian_product(gen::complete(2), gen::complete(2));
  auto edges = sq.edges();
  edges.push_back({0, 4});
  edges.push_back({2, 4});
  return Multigraph::from_edge_list(5, edges);
}

struct NamedGraph {
  std::string name;
  Multigraph graph;
};

inline std::vector<NamedGraph> all_graphs() {
  return {
      {"cube", cube()},
      {"slashed_diamond", slashed_diamond()},
      {"diamond_wedge_low", diamond_wedge_low()},
      {"diamond_wedge_high", diamond_wedge_high()},
      {"lift_pair_g", lift_pair_g()},
      {"lift_pair_h", lift_pair_h()},
      {"lift_pair_h_minus", lift_pair_h_minus()},
      {"short_tree", short_tree()},
      {"bridged_digon", bridged_digon()},
      {"short_tree_product", short_tree_product()},
      {"short_tree_product_smoothed", short_tree_product_smoothed()},
      {"rook_sharpness", rook_sharpness()},
      {"odd_sharpness", odd_sharpness()},
  };
}

}  // namespace chipfire::fixtures
