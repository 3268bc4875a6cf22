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
#include <utility>
#include <vector>

#include "chipfire/brute_force.hpp"
#include "chipfire/constructions.hpp"
#include "chipfire/gonality.hpp"
#include "chipfire/invariants.hpp"
#include "chipfire/scramble.hpp"

namespace chipfire {

enum class Quantity { kScrambleNumber, kGonality };

inline std::string to_string(Quantity q) {
  return q == Quantity::kScrambleNumber ? "sn" : "gon";
}

struct BoundReport {
  Quantity quantity = Quantity::kScrambleNumber;
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  std::string lower_source;
  std::string upper_source;

  bool exact() const { return lower == upper; }
  // Raise the lower side (or lower the upper side) when the new value is
  // strictly better; ties keep the earlier source.
  void offer_lower(std::uint64_t v, std::string source) {
    if (lower_source.empty() || v > lower) {
      lower = v;
      lower_source = std::move(source);
    }
  }
  void offer_upper(std::uint64_t v, std::string source) {
    if (upper_source.empty() || v < upper) {
      upper = v;
      upper_source = std::move(source);
    }
  }
};

struct SnBoundsOptions {
  // Largest (smoothed) piece on which gonality is searched for the upper side.
  std::size_t gonality_vertex_budget = 12;
  std::size_t gonality_edge_budget = 24;
  // Run the exhaustive oracle on pieces with at most this many vertices
  // (0 disables). brute_max_eggs is passed through to the oracle.
  std::size_t brute_vertex_limit = 0;
  std::size_t brute_max_eggs = 0;
  // Extra scrambles on the input graph itself.
  std::vector<Scramble> scrambles;
  // When the input is G□H under the row-major layout: the factors.
  std::optional<std::pair<Multigraph, Multigraph>> product_factors;
  unsigned threads = 1;
};

// One 2-edge-connected piece after component and bridge splitting.
struct SnPiece {
  VertexSet vertices;          // in the input graph
  Multigraph smoothed;
  BoundReport bounds;
};

struct SnBoundsResult {
  BoundReport report;
  std::vector<SnPiece> pieces;
};

// Vertex sets of the components left after deleting every bridge.
inline std::vector<VertexSet> two_edge_connected_pieces(const Multigraph& g) {
  const auto br = bridges(g);
  std::vector<EdgeSpec> kept;
  for (const auto& e : g.edges()) {
    const bool is_bridge = std::any_of(br.begin(), br.end(), [&](const EdgeSpec& b) {
      return b.u == e.u && b.v == e.v;
    });
    if (!is_bridge) kept.push_back(e);
  }
  return components(Multigraph::from_edge_list(g.vertex_count(), kept));
}

namespace detail {

inline BoundReport piece_bounds(const Multigraph& p, const SnBoundsOptions& opt) {
  BoundReport r;
  const auto n = static_cast<std::uint64_t>(p.vertex_count());
  r.offer_lower(1, "single egg");
  r.offer_upper(n, "hitting set V");
  if (n == 1) return r;
  r.offer_lower(scramble_order(vertex_scramble(p)).order, "vertex scramble");
  r.offer_lower(scramble_order(edge_scramble(p)).order, "edge scramble");
  if (p.vertex_count() <= opt.gonality_vertex_budget &&
      p.edge_count() <= opt.gonality_edge_budget) {
    GonalityOptions go;
    go.threads = opt.threads;
    r.offer_upper(static_cast<std::uint64_t>(gonality(p, go).value),
                  "gonality search");
  }
  if (!r.exact() && opt.brute_vertex_limit > 0 &&
      p.vertex_count() <= opt.brute_vertex_limit) {
    const auto b = brute_force_sn(p, opt.brute_max_eggs);
    if (b.exact) {
      r.lower = r.upper = b.value;
      r.lower_source = r.upper_source = "exhaustive";
    } else {
      r.offer_lower(b.value, "exhaustive (truncated pool)");
    }
  }
  return r;
}

}  // namespace detail

// Bounds on sn(G). The graph is split into components and then at bridges
// (sn is the maximum over the pieces), every piece is smoothed, and each
// piece is bounded below by scramble orders and above by its gonality.
inline SnBoundsResult sn_bounds(const Multigraph& g, const SnBoundsOptions& opt = {}) {
  SnBoundsResult out;
  out.report.quantity = Quantity::kScrambleNumber;
  std::uint64_t hi = 0;
  std::string hi_source;
  for (const auto& piece : two_edge_connected_pieces(g)) {
    SnPiece sp{piece, Multigraph(1), {}};
    const auto sub = g.induced(piece);
    sp.smoothed = is_connected(sub) && sub.vertex_count() > 2
                      ? smooth_two_valent(sub)
                      : sub;
    sp.bounds = detail::piece_bounds(sp.smoothed, opt);
    out.report.offer_lower(sp.bounds.lower, "piece " + piece.to_string() + ": " +
                                                sp.bounds.lower_source);
    if (sp.bounds.upper > hi || hi_source.empty()) {
      hi = sp.bounds.upper;
      hi_source = "piece " + piece.to_string() + ": " + sp.bounds.upper_source;
    }
    out.pieces.push_back(std::move(sp));
  }
  out.report.upper = hi;
  out.report.upper_source = hi_source;

  for (std::size_t i = 0; i < opt.scrambles.size(); ++i)
    out.report.offer_lower(scramble_order(opt.scrambles[i]).order,
                           "supplied scramble #" + std::to_string(i));
  if (opt.product_factors) {
    const auto& [fg, fh] = *opt.product_factors;
    if (fg.vertex_count() * fh.vertex_count() != g.vertex_count() ||
        !(cartesian_product(fg, fh) == g))
      throw ValidationError("supplied factors do not multiply to the graph");
    for (int swap = 0; swap < 2; ++swap) {
      const auto& a = swap ? fh : fg;
      const auto& b = swap ? fg : fh;
      if (!is_connected(a) || !is_connected(b)) break;
      const auto kappa = vertex_connectivity(a);
      for (std::uint64_t k = 1; k <= kappa && 2 * k <= a.vertex_count() + 1; ++k) {
        auto s = product_scramble(a, b, k);
        if (swap) {
          // Rebuild on the G□H layout from the H□G one.
          const ProductLayout to{fg.vertex_count(), fh.vertex_count()};
          std::vector<VertexSet> eggs;
          for (const auto& e : s.eggs()) {
            VertexSet t(g.vertex_count());
            e.for_each([&](Vertex v) {
              t.insert(to.vertex(v % b.vertex_count(), v / b.vertex_count()));
            });
            eggs.push_back(std::move(t));
          }
          s = Scramble(g, std::move(eggs));
        }
        out.report.offer_lower(scramble_order(s).order,
                               std::string("product scramble over ") +
                                   (swap ? "H" : "G") + " copies, k=" +
                                   std::to_string(k));
      }
    }
  }
  if (out.report.lower > out.report.upper)
    throw SoundnessError("scramble lower bound exceeds gonality upper bound");
  return out;
}

}  // namespace chipfire
