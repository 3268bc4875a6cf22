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

#include <functional>
#include <string>
#include <vector>

#include "chipfire/brute_force.hpp"
#include "chipfire/certify.hpp"
#include "chipfire/fixtures.hpp"
#include "chipfire/gonality.hpp"
#include "chipfire/sn_bounds.hpp"

namespace chipfire::fixtures {

struct FixtureCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

// Delete one u-v and one v-w edge and add u-w.
inline Multigraph lift(const Multigraph& g, Vertex u, Vertex v, Vertex w) {
  if (u == v || v == w || u == w) throw ValidationError("lift needs distinct vertices");
  if (!g.adjacent(u, v) || !g.adjacent(v, w))
    throw ValidationError("lift needs edges u-v and v-w");
  auto edges = g.edges();
  for (auto& e : edges)
    if ((e.u == std::min(u, v) && e.v == std::max(u, v)) ||
        (e.u == std::min(v, w) && e.v == std::max(v, w)))
      --e.count;
  std::erase_if(edges, [](const EdgeSpec& e) { return e.count == 0; });
  edges.push_back({u, w, 1});
  return Multigraph::from_edge_list(g.vertex_count(), edges);
}

inline std::vector<FixtureCheck> run_checks(unsigned threads = 1) {
  std::vector<FixtureCheck> out;
  auto expect = [&](std::string name, const std::string& want, const std::string& got) {
    out.push_back({std::move(name), want, got, want == got});
  };
  auto num = [](auto v) { return std::to_string(v); };
  GonalityOptions gopt;
  gopt.threads = threads;
  auto gon = [&](const Multigraph& g) { return num(gonality(g, gopt).value); };
  auto sn_exact = [&](const Multigraph& g) {
    SnBoundsOptions o;
    o.brute_vertex_limit = 8;
    o.threads = threads;
    const auto r = sn_bounds(g, o).report;
    return r.exact() ? num(r.lower) : num(r.lower) + ".." + num(r.upper);
  };

  {
    using namespace cube_label;
    const auto c = cube();
    expect("cube: gonality", "4", gon(c));
    expect("cube: spoke scramble order", "4", num(scramble_order(cube_scramble()).order));
    expect("cube: sn bounds", "4", sn_exact(c));
    auto d = fire(c, cube_divisor(), s);
    expect("cube: fire s", "(-2 2 1 2 1 0 0 0)", d.to_string());
    for (Vertex q : {t, u, v}) d = fire(c, d, q);
    expect("cube: fire s, t, u, v", "(0 0 0 0 1 1 1 1)", d.to_string());
    expect("cube: fire {s,t,u,v} at once", "(0 0 0 0 1 1 1 1)",
           fire_set(c, cube_divisor(), VertexSet(8, {s, t, u, v})).to_string());
    expect("cube: rank of (s)+(t)+(u)+(v)", "1", num(rank(c, cube_divisor(), 2)));
  }
  {
    const Multigraph trio[] = {slashed_diamond(), diamond_wedge_low(), diamond_wedge_high()};
    const char* names[] = {"slashed diamond", "low wedge", "high wedge"};
    const char* want[] = {"2", "2", "3"};
    for (int i = 0; i < 3; ++i) {
      expect(std::string(names[i]) + ": gonality", want[i], gon(trio[i]));
      expect(std::string(names[i]) + ": sn bounds", want[i], sn_exact(trio[i]));
    }
    expect("high wedge: drawn scramble order", "3",
           num(scramble_order(diamond_wedge_high_scramble()).order));
  }
  {
    using namespace lift_label;
    const auto h = lift_pair_h();
    const auto g = lift_pair_g();
    expect("lift pair: G = two lifts of H", "yes",
           lift(lift(h, a, c, d), a, d, e) == g ? "yes" : "no");
    expect("lift pair: scramble order on G", "3",
           num(scramble_order(lift_pair_g_scramble()).order));
    expect("lift pair: sn(G)", "3", sn_exact(g));
    expect("lift pair: rank (a)+(b) on H minus a c-d edge", "1",
           num(rank(lift_pair_h_minus(), lift_pair_divisor(), 2)));
    expect("lift pair: gon(H minus a c-d edge)", "2", gon(lift_pair_h_minus()));
    expect("lift pair: sn(H)", "2", sn_exact(h));
  }
  {
    using namespace smoothed_label;
    const auto p = short_tree_product();
    const auto j = short_tree_product_smoothed();
    expect("short tree product: gonality", "4", gon(p));
    expect("short tree product: smoothed vertex count", "6", num(j.vertex_count()));
    expect("short tree product: |E({y,z}, rest)| after smoothing", "2",
           num(edge_boundary(j, VertexSet(6, {y, z}))));
    expect("short tree product: sn of smoothed graph", "3", num(brute_force_sn(j).value));
    expect("short tree product: sn", "3", num(brute_force_sn(p).value));
  }
  {
    const auto r = rook_sharpness();
    const auto o = odd_sharpness();
    expect("K3xK2: min degree = n/2", "3", num(min_degree(r)));
    expect("K3xK2: gonality", "3", gon(r));
    expect("K3xK2: n - alpha", "4", num(r.vertex_count() - independence_number(r)));
    expect("K3xK2: all-equal check declines", "declined",
           check_all_equal(r) ? "certified" : "declined");
    expect("odd sharpness: min degree", "2", num(min_degree(o)));
    expect("odd sharpness: gonality", "2", gon(o));
    expect("odd sharpness: n - alpha", "3", num(o.vertex_count() - independence_number(o)));
  }
  return out;
}

}  // namespace chipfire::fixtures
