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

#include "chipfire/constructions.hpp"
#include "chipfire/flow.hpp"
#include "chipfire/hitting_set.hpp"
#include "chipfire/invariants.hpp"
#include "chipfire/multigraph.hpp"

namespace chipfire {

// A nonempty family of eggs: nonempty vertex sets, each connected in the
// host. Construction drops duplicate eggs and eggs that strictly contain
// another egg; neither changes the order (a hitter of the smaller egg hits
// the larger, and a cut separating the larger egg from a third separates
// the smaller one too).
class Scramble {
 public:
  Scramble(Multigraph host, std::vector<VertexSet> eggs)
      : host_(std::move(host)) {
    if (eggs.empty()) throw ValidationError("a scramble needs at least one egg");
    for (const auto& e : eggs) {
      if (e.host_size() != host_.vertex_count())
        throw ValidationError("egg is over a different vertex count");
      if (e.empty()) throw ValidationError("eggs must be nonempty");
      if (!is_connected_subset(host_, e))
        throw ValidationError("egg " + e.to_string() + " is not connected");
    }
    std::sort(eggs.begin(), eggs.end(), [](const VertexSet& a, const VertexSet& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    eggs.erase(std::unique(eggs.begin(), eggs.end()), eggs.end());
    for (const auto& e : eggs) {
      const bool dominated = std::any_of(
          eggs_.begin(), eggs_.end(),
          [&](const VertexSet& kept) { return kept.is_subset_of(e); });
      if (!dominated) eggs_.push_back(e);
    }
  }

  const Multigraph& host() const { return host_; }
  const std::vector<VertexSet>& eggs() const { return eggs_; }

 private:
  Multigraph host_;
  std::vector<VertexSet> eggs_;
};

struct EggCutWitness {
  VertexSet side;         // contains eggs[inside], disjoint from eggs[outside]
  std::uint64_t size = 0;
  std::size_t inside = 0;
  std::size_t outside = 0;
};

// Smallest egg-cut size; empty (infinite) when no two eggs are disjoint.
struct EggCutNumber {
  std::optional<EggCutWitness> witness;

  bool infinite() const { return !witness.has_value(); }
  std::uint64_t value() const {
    if (!witness) throw ValidationError("egg-cut number is infinite");
    return witness->size;
  }
  std::string to_string() const {
    return witness ? std::to_string(witness->size) : std::string("inf");
  }
};

struct ScrambleOrder {
  std::uint64_t order = 0;
  std::uint64_t hitting = 0;
  EggCutNumber egg_cut;
  VertexSet hitting_set;
};

inline HittingSet hitting_number(const Scramble& s) {
  return minimum_hitting_set(s.eggs(), s.host().vertex_count());
}

// Minimum over disjoint egg pairs of the edge cut between them, each egg
// contracted to a terminal.
inline EggCutNumber egg_cut_number(const Scramble& s) {
  const auto& eggs = s.eggs();
  EggCutNumber out;
  std::int64_t best = FlowNetwork::kInfinite;
  for (std::size_t i = 0; i < eggs.size(); ++i)
    for (std::size_t j = i + 1; j < eggs.size(); ++j) {
      if (eggs[i].intersects(eggs[j])) continue;
      auto cut = min_edge_cut(s.host(), eggs[i], eggs[j], best);
      if (!out.witness || cut.size < best) {
        best = cut.size;
        out.witness = EggCutWitness{std::move(cut.source_side),
                                    static_cast<std::uint64_t>(cut.size), i, j};
      }
    }
  return out;
}

inline ScrambleOrder scramble_order(const Scramble& s) {
  ScrambleOrder out;
  auto h = hitting_number(s);
  out.hitting = h.size;
  out.hitting_set = std::move(h.set);
  out.egg_cut = egg_cut_number(s);
  out.order = out.egg_cut.infinite()
                  ? out.hitting
                  : std::min(out.hitting, out.egg_cut.value());
  return out;
}

// One singleton egg per vertex.
inline Scramble vertex_scramble(const Multigraph& g) {
  std::vector<VertexSet> eggs;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    eggs.push_back(VertexSet(g.vertex_count(), {v}));
  return Scramble(g, std::move(eggs));
}

// One egg {u, v} per adjacent pair; parallel edges give a single egg.
inline Scramble edge_scramble(const Multigraph& g) {
  std::vector<VertexSet> eggs;
  for (const auto& e : g.edges())
    eggs.push_back(VertexSet(g.vertex_count(), {e.u, e.v}));
  if (eggs.empty()) throw ValidationError("edge scramble of an edgeless graph");
  return Scramble(g, std::move(eggs));
}

// Eggs are the canonical copies G x {w} with k-1 vertices deleted, for
// every w in V(H) and every (k-1)-subset of V(G). Requires G and H
// connected, kappa(G) >= k >= 1 and |V(G)| >= 2k - 1.
inline Scramble product_scramble(const Multigraph& g, const Multigraph& h,
                                 std::size_t k) {
  const std::size_t gn = g.vertex_count();
  if (k < 1) throw HypothesisError("product scramble needs k >= 1");
  if (!is_connected(g) || !is_connected(h))
    throw HypothesisError("product scramble needs connected factors");
  if (gn + 1 < 2 * k)
    throw HypothesisError("product scramble needs |V(G)| >= 2k - 1");
  if (vertex_connectivity(g) < k)
    throw HypothesisError("product scramble needs kappa(G) >= k");
  const ProductLayout lay{gn, h.vertex_count()};
  std::vector<VertexSet> eggs;
  std::vector<bool> drop(gn, false);
  std::fill(drop.begin(), drop.begin() + static_cast<std::ptrdiff_t>(k - 1), true);
  // Enumerate (k-1)-subsets in lexicographic order of their indicator.
  std::vector<std::vector<bool>> masks;
  do {
    masks.push_back(drop);
  } while (std::prev_permutation(drop.begin(), drop.end()));
  for (Vertex w = 0; w < lay.h_size; ++w)
    for (const auto& mask : masks) {
      VertexSet egg(lay.size());
      for (Vertex u = 0; u < gn; ++u)
        if (!mask[u]) egg.insert(lay.vertex(u, w));
      eggs.push_back(std::move(egg));
    }
  return Scramble(cartesian_product(g, h), std::move(eggs));
}

}  // namespace chipfire
