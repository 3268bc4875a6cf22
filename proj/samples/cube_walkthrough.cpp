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

// Walk through chip-firing on the 3-cube: fire the inner face, reduce,
// compute rank and gonality, and evaluate the spoke scramble.

#include <cstdio>
#include <iostream>

#include "chipfire.hpp"

namespace cf = chipfire;

int main() {
  using namespace cf::fixtures::cube_label;
  const auto cube = cf::fixtures::cube();
  const auto d = cf::fixtures::cube_divisor();
  std::cout << "cube: " << cube.vertex_count() << " vertices, " << cube.edge_count() << " edges\n";
  std::cout << "D = (s)+(t)+(u)+(v) = " << d.to_string() << "\n";

  auto e = d;
  const char* names = "stuvwxyz";
  for (cf::Vertex q : {s, t, u, v}) {
    e = cf::fire(cube, e, q);
    std::cout << "fire " << names[q] << ": " << e.to_string() << "\n";
  }
  const auto at_once = cf::fire_set(cube, d, cf::VertexSet(8, {s, t, u, v}));
  std::cout << "fire {s,t,u,v} at once: " << at_once.to_string() << "\n";

  // Move everything onto the outer face and bring it back by reduction.
  const auto red = cf::q_reduce_with_script(cube, at_once, s);
  std::cout << "s-reduced form of the outer face: " << red.reduced.to_string() << " after "
            << red.script.size() << " set-firings\n";
  if (!(cf::replay(cube, at_once, red.script) == red.reduced)) {
    std::cerr << "replayed script disagrees with the reduction\n";
    return 1;
  }

  const auto r = cf::rank(cube, d, 2);
  const auto g = cf::gonality(cube);
  const auto order = cf::scramble_order(cf::fixtures::cube_scramble());
  std::cout << "rank(D) = " << r << "\n";
  std::cout << "gonality = " << g.value << ", witness " << g.witness.to_string() << "\n";
  std::cout << "spoke scramble: hitting " << order.hitting << ", egg-cut "
            << order.egg_cut.to_string() << ", order " << order.order << "\n";

  const auto sn = cf::sn_bounds(cube).report;
  std::cout << "sn: " << sn.lower << " (" << sn.lower_source << ") .. " << sn.upper << " ("
            << sn.upper_source << ")\n";
  const bool ok = r == 1 && g.value == 4 && order.order == 4 && sn.exact() && sn.lower == 4;
  return ok ? 0 : 1;
}
