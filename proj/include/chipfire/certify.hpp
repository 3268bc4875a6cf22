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
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chipfire/constructions.hpp"
#include "chipfire/gonality.hpp"
#include "chipfire/invariants.hpp"
#include "chipfire/scramble.hpp"
#include "chipfire/sn_bounds.hpp"

namespace chipfire {

// ---- product lower-bound formulas -----------------------------------------

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw HypothesisError("hypothesis failed: " + what);
}

inline std::int64_t as_int(std::uint64_t x) { return static_cast<std::int64_t>(x); }

}  // namespace detail

// min(k|V(H)|, |V(G)|lambda(H), (|V(G)| - 2k + 2)lambda(H) + 2lambda(G)),
// a lower bound on sn(G x H) from the scramble of G-copies minus k-1 vertices.
inline std::uint64_t product_scramble_lower(const Multigraph& g, const Multigraph& h,
                                 std::uint64_t k) {
  detail::require(is_connected(g), "G connected");
  detail::require(is_connected(h), "H connected");
  detail::require(k >= 1, "k >= 1");
  detail::require(vertex_connectivity(g) >= k, "kappa(G) >= k");
  detail::require(g.vertex_count() + 1 >= 2 * k, "|V(G)| >= 2k-1");
  const auto gn = detail::as_int(g.vertex_count());
  const auto hn = detail::as_int(h.vertex_count());
  const auto lg = detail::as_int(edge_connectivity(g));
  const auto lh = detail::as_int(edge_connectivity(h));
  const auto ki = detail::as_int(k);
  return static_cast<std::uint64_t>(
      std::min({ki * hn, gn * lh, (gn - 2 * ki + 2) * lh + 2 * lg}));
}

// max(min(|V(H)|, |V(G)|lambda(H)), min(|V(G)|, |V(H)|lambda(G))).
inline std::uint64_t canonical_copy_lower(const Multigraph& g, const Multigraph& h) {
  detail::require(is_connected(g), "G connected");
  detail::require(is_connected(h), "H connected");
  detail::require(g.vertex_count() >= 2, "|V(G)| >= 2");
  detail::require(h.vertex_count() >= 2, "|V(H)| >= 2");
  const auto gn = g.vertex_count(), hn = h.vertex_count();
  const auto lg = edge_connectivity(g), lh = edge_connectivity(h);
  return std::max<std::uint64_t>(std::min<std::uint64_t>(hn, gn * lh),
                                 std::min<std::uint64_t>(gn, hn * lg));
}

// min(2|V(H)|, |V(G)|lambda(H), (|V(G)| - 2)lambda(H) + 2 delta(G)).
inline std::uint64_t two_connected_lower(const Multigraph& g, const Multigraph& h) {
  detail::require(is_connected(g), "G connected");
  detail::require(is_connected(h), "H connected");
  detail::require(vertex_connectivity(g) >= 2, "kappa(G) >= 2");
  const auto gn = detail::as_int(g.vertex_count());
  const auto hn = detail::as_int(h.vertex_count());
  const auto lh = detail::as_int(edge_connectivity(h));
  const auto dg = detail::as_int(min_degree(g));
  return static_cast<std::uint64_t>(
      std::min({2 * hn, gn * lh, (gn - 2) * lh + 2 * dg}));
}

// ---- factor data ----------------------------------------------------------

struct FactorData {
  std::uint64_t n = 0;
  std::uint64_t lambda = 0;
  std::uint64_t kappa = 0;
  std::uint64_t delta = 0;
  std::uint64_t gon = 0;
  bool gon_supplied = false;
  bool tree = false;
  bool cycle = false;
  bool complete = false;
  std::optional<std::pair<std::size_t, std::size_t>> bipartite_parts;

  bool hyperelliptic() const { return n >= 3 && gon == 2; }
};

struct CertifyOptions {
  std::optional<std::uint64_t> gon_g;
  std::optional<std::uint64_t> gon_h;
  // Factors larger than this need their gonality supplied.
  std::size_t gonality_vertex_budget = 12;
  unsigned threads = 1;
};

inline FactorData factor_data(const Multigraph& g, std::optional<std::uint64_t> gon,
                              std::size_t budget, unsigned threads,
                              const char* name) {
  if (!is_connected(g))
    throw HypothesisError(std::string("factor ") + name + " must be connected");
  FactorData f;
  f.n = g.vertex_count();
  f.lambda = edge_connectivity(g);
  f.kappa = vertex_connectivity(g);
  f.delta = min_degree(g);
  f.tree = is_tree(g);
  f.cycle = is_cycle(g);
  f.complete = f.n >= 2 && is_complete(g);
  f.bipartite_parts = complete_bipartite_parts(g);
  if (gon) {
    f.gon = *gon;
    f.gon_supplied = true;
    if (f.gon < 1 || f.gon > f.n)
      throw ValidationError(std::string("supplied gon(") + name + ") out of range");
  } else if (f.n <= budget) {
    GonalityOptions opt;
    opt.threads = threads;
    f.gon = static_cast<std::uint64_t>(gonality(g, opt).value);
  } else {
    throw ValidationError(std::string("factor ") + name + " has " +
                          std::to_string(f.n) +
                          " vertices, over the gonality budget; supply its gonality");
  }
  return f;
}

inline std::uint64_t product_gon_upper(const FactorData& g, const FactorData& h) {
  return std::min(g.n * h.gon, h.n * g.gon);
}

inline std::uint64_t product_gon_upper(const Multigraph& g, const Multigraph& h,
                                       const CertifyOptions& opt = {}) {
  return product_gon_upper(
      factor_data(g, opt.gon_g, opt.gonality_vertex_budget, opt.threads, "G"),
      factor_data(h, opt.gon_h, opt.gonality_vertex_budget, opt.threads, "H"));
}

// ---- certificates ---------------------------------------------------------

struct Hypothesis {
  std::string name;
  std::string computed;
  bool pass = false;
};

struct StatementCheck {
  std::string id;
  bool swapped = false;           // factors taken as (H, G)
  std::vector<Hypothesis> checklist;
  std::uint64_t value = 0;        // meaningful only if passed()
  bool sn_equal = true;           // the statement also pins sn
  bool passed() const {
    return std::all_of(checklist.begin(), checklist.end(),
                       [](const Hypothesis& h) { return h.pass; });
  }
};

struct Certificate {
  std::optional<StatementCheck> applied;
  std::optional<std::uint64_t> value;
  BoundReport bounds;             // gon(G x H) bounds
  std::vector<StatementCheck> attempts;
  FactorData g, h;
};

namespace detail {

inline std::string num(std::int64_t x) { return std::to_string(x); }

class Checklist {
 public:
  Checklist(std::string id, bool swapped) { c_.id = std::move(id); c_.swapped = swapped; }

  Checklist& le(const std::string& name, std::int64_t a, std::int64_t b) {
    c_.checklist.push_back({name, num(a) + " <= " + num(b), a <= b});
    return *this;
  }
  Checklist& eq(const std::string& name, std::int64_t a, std::int64_t b) {
    c_.checklist.push_back({name, num(a) + " = " + num(b), a == b});
    return *this;
  }
  Checklist& truth(const std::string& name, bool v) {
    c_.checklist.push_back({name, v ? "yes" : "no", v});
    return *this;
  }
  StatementCheck done(std::int64_t value, bool sn_equal = true) {
    c_.value = static_cast<std::uint64_t>(std::max<std::int64_t>(value, 0));
    c_.sn_equal = sn_equal;
    return std::move(c_);
  }

 private:
  StatementCheck c_;
};

// Every product statement for the orientation (G, H), in priority order.
inline std::vector<StatementCheck> product_statements(const FactorData& g,
                                                      const FactorData& h,
                                                      bool swapped) {
  std::vector<StatementCheck> out;
  const auto gn = as_int(g.n), hn = as_int(h.n);
  const auto lg = as_int(g.lambda), lh = as_int(h.lambda);
  const auto kg = as_int(g.kappa), dg = as_int(g.delta);
  const auto gg = as_int(g.gon), gh = as_int(h.gon);

  out.push_back(Checklist("tree-factor", swapped)
                    .truth("G is a tree", g.tree)
                    .le("|V(H)| <= |V(G)|*lambda(H)", hn, gn * lh)
                    .done(hn));
  out.push_back(Checklist("gonality-equals-edge-connectivity-factor", swapped)
                    .eq("gon(H) = lambda(H)", gh, lh)
                    .le("|V(G)|*lambda(H) <= |V(H)|", gn * lh, hn)
                    .done(gn * lh));
  out.push_back(Checklist("tree-times-k-edge-connected-gonality-k", swapped)
                    .truth("G is a tree", g.tree)
                    .eq("gon(H) = lambda(H)", gh, lh)
                    .done(std::min(hn, lh * gn)));
  {
    const auto parts = h.bipartite_parts.value_or(std::pair<std::size_t, std::size_t>{0, 0});
    const auto m = as_int(parts.first), n = as_int(parts.second);
    out.push_back(Checklist("complete-bipartite-factor", swapped)
                      .truth("H is complete bipartite K_{m,n}, m <= n",
                             h.bipartite_parts.has_value())
                      .le("|V(G)|*m <= m+n", gn * m, m + n)
                      .done(gn * m));
  }
  out.push_back(Checklist("two-connected-gonality-two-factor", swapped)
                    .le("2 <= kappa(G)", 2, kg)
                    .eq("gon(G) = 2", gg, 2)
                    .le("2|V(H)| <= |V(G)|*lambda(H)", 2 * hn, gn * lh)
                    .le("2|V(H)| <= |V(G)|*lambda(H) + 2(delta(G) - lambda(H))",
                        2 * hn, gn * lh + 2 * (dg - lh))
                    .done(2 * hn));
  out.push_back(Checklist("two-connected-times-gonality-equals-edge-connectivity",
                          swapped)
                    .le("2 <= kappa(G)", 2, kg)
                    .eq("gon(H) = lambda(H)", gh, lh)
                    .le("|V(G)|*lambda(H) <= 2|V(H)|", gn * lh, 2 * hn)
                    .le("lambda(H) <= delta(G)", lh, dg)
                    .done(gn * lh));
  // gon(C_m x K_n) = min(2n, m(n-1)); C_2 is the doubled edge and is handled
  // by its own burning argument, C_3 = K_3 by the rook's graph formula.
  out.push_back(Checklist("cycle-times-complete", swapped)
                    .truth("G is a cycle C_m (m >= 2)", g.cycle)
                    .truth("H is complete K_n (n >= 2)", h.complete)
                    .done(std::min(2 * hn, gn * (hn - 1)), g.n >= 4));
  out.push_back(Checklist("two-connected-hyperelliptic-pair", swapped)
                    .le("2 <= kappa(G)", 2, kg)
                    .le("2 <= kappa(H)", 2, as_int(h.kappa))
                    .truth("G hyperelliptic", g.hyperelliptic())
                    .truth("H hyperelliptic", h.hyperelliptic())
                    .done(std::min(2 * gn, 2 * hn)));

  // k >= 3 family: the third term of the general bound is dominated once
  // lambda(G) >= (k-1)lambda(H).
  {
    std::vector<StatementCheck> ki, kii;
    for (std::int64_t k = 3; k <= std::max<std::int64_t>(kg, 3); ++k) {
      auto base = [&](const char* id) {
        Checklist c(id, swapped);
        c.le("k = " + num(k) + " <= kappa(G)", k, kg)
            .le("2k-1 <= |V(G)|", 2 * k - 1, gn)
            .le("(k-1)*lambda(H) <= lambda(G)", (k - 1) * lh, lg);
        return c;
      };
      ki.push_back(base("k-connected-gonality-k")
                       .le("k|V(H)| <= |V(G)|*lambda(H)", k * hn, gn * lh)
                       .eq("gon(G) = k", gg, k)
                       .done(k * hn));
      kii.push_back(base("k-connected-gonality-equals-edge-connectivity")
                        .le("|V(G)|*lambda(H) <= k|V(H)|", gn * lh, k * hn)
                        .eq("gon(H) = lambda(H)", gh, lh)
                        .done(gn * lh));
    }
    auto first = [](std::vector<StatementCheck>& v) {
      auto it = std::find_if(v.begin(), v.end(),
                             [](const StatementCheck& c) { return c.passed(); });
      return it == v.end() ? v.front() : *it;
    };
    out.push_back(first(ki));
    out.push_back(first(kii));
  }

  {
    const auto k = kg;
    out.push_back(Checklist("equal-connectivity-and-gonality", swapped)
                      .eq("kappa(G) = lambda(G)", kg, lg)
                      .eq("lambda(G) = gon(G)", lg, gg)
                      .le("k <= lambda(H)", k, lh)
                      .le("|V(H)| <= |V(G)| - 2k + 4", hn, gn - 2 * k + 4)
                      .le("2k-1 <= |V(G)|", 2 * k - 1, gn)
                      .done(k * hn));
  }
  return out;
}

}  // namespace detail

// Largest applicable lower bound on sn(G x H) among the product formulas,
// with the formula that produced it.
inline std::pair<std::uint64_t, std::string> product_sn_lower(const Multigraph& g,
                                                              const Multigraph& h) {
  std::pair<std::uint64_t, std::string> best{1, "single egg"};
  auto offer = [&](std::uint64_t v, std::string src) {
    if (v > best.first) best = {v, std::move(src)};
  };
  for (int swap = 0; swap < 2; ++swap) {
    const auto& a = swap ? h : g;
    const auto& b = swap ? g : h;
    const std::string tag = swap ? " (H,G)" : " (G,H)";
    if (a.vertex_count() >= 2 && b.vertex_count() >= 2)
      offer(canonical_copy_lower(a, b), "copies bound" + tag);
    const auto kappa = vertex_connectivity(a);
    if (kappa >= 2) offer(two_connected_lower(a, b), "two-connected bound" + tag);
    for (std::uint64_t k = 1; k <= kappa && 2 * k <= a.vertex_count() + 1; ++k)
      offer(product_scramble_lower(a, b, k), "k-copies bound k=" + std::to_string(k) + tag);
  }
  return best;
}

// Exact gon(G x H) (and usually sn) when a product statement applies, else
// open bounds.
inline Certificate certify_product(const Multigraph& g, const Multigraph& h,
                                   const CertifyOptions& opt = {}) {
  Certificate cert;
  cert.g = factor_data(g, opt.gon_g, opt.gonality_vertex_budget, opt.threads, "G");
  cert.h = factor_data(h, opt.gon_h, opt.gonality_vertex_budget, opt.threads, "H");

  const auto [lo, lo_src] = product_sn_lower(g, h);
  cert.bounds.quantity = Quantity::kGonality;
  cert.bounds.offer_lower(lo, lo_src);
  cert.bounds.offer_upper(product_gon_upper(cert.g, cert.h),
                          "min(|V(G)|gon(H), |V(H)|gon(G))");

  for (int swap = 0; swap < 2 && !cert.applied; ++swap) {
    auto stmts = swap ? detail::product_statements(cert.h, cert.g, true)
                      : detail::product_statements(cert.g, cert.h, false);
    for (auto& s : stmts) {
      const bool ok = s.passed();
      cert.attempts.push_back(s);
      if (ok) {
        cert.applied = std::move(s);
        break;
      }
    }
  }
  if (!cert.applied && cert.bounds.exact()) {
    StatementCheck s;
    s.id = "bound-sandwich";
    s.checklist.push_back({"lower bound (" + lo_src + ") = product upper bound",
                           std::to_string(cert.bounds.lower) + " = " +
                               std::to_string(cert.bounds.upper),
                           true});
    s.value = cert.bounds.lower;
    cert.applied = s;
  }
  if (cert.applied) {
    const auto v = cert.applied->value;
    if (v > cert.bounds.upper || (cert.applied->sn_equal && v < cert.bounds.lower))
      throw SoundnessError("certified value " + std::to_string(v) +
                           " falls outside the computed bounds");
    cert.value = v;
    cert.bounds.lower = cert.bounds.upper = v;
    cert.bounds.lower_source = cert.bounds.upper_source = cert.applied->id;
  }
  return cert;
}

// ---- edge scramble / independence number ----------------------------------

struct AllEqualCertificate {
  std::uint64_t value = 0;          // sn = gon = n - alpha
  std::uint64_t alpha = 0;
  std::uint64_t edge_scramble_order = 0;
  Divisor gonality_witness;         // one chip on each vertex of a vertex cover
};

namespace detail {

inline Divisor cover_divisor(std::size_t n, const VertexSet& cover) {
  Divisor d(n);
  cover.for_each([&](Vertex v) { d[v] = 1; });
  return d;
}

}  // namespace detail

// sn = gon = n - alpha when delta(G) >= floor(n/2) + 1; nullopt when the
// minimum-degree condition fails.
inline std::optional<AllEqualCertificate> check_all_equal(const Multigraph& g) {
  if (!g.is_simple()) throw ValidationError("graph must be simple");
  if (!is_connected(g)) throw ValidationError("graph must be connected");
  const auto n = g.vertex_count();
  if (n < 2 || min_degree(g) < n / 2 + 1) return std::nullopt;
  const auto order = scramble_order(edge_scramble(g));
  AllEqualCertificate c;
  c.alpha = independence_number(g);
  c.value = n - c.alpha;
  c.edge_scramble_order = order.order;
  c.gonality_witness = detail::cover_divisor(n, order.hitting_set);
  if (order.order != c.value || order.hitting != c.value)
    throw SoundnessError("edge scramble order differs from n - alpha");
  if (!has_positive_rank(g, c.gonality_witness))
    throw SoundnessError("vertex-cover divisor lacks positive rank");
  return c;
}

enum class AlphaSolver { kGonality, kSandwich };

struct AlphaReduction {
  std::uint64_t alpha = 0;
  std::uint64_t m = 0;
  std::uint64_t cone_value = 0;     // gon of the cone = sn of the cone
  Multigraph cone_graph;
};

// alpha(G) = 2m - gon(cone(G, m)) for simple connected G on m vertices.
inline AlphaReduction reduce_alpha(const Multigraph& g,
                                   AlphaSolver solver = AlphaSolver::kGonality,
                                   unsigned threads = 1) {
  if (!g.is_simple()) throw ValidationError("graph must be simple");
  if (!is_connected(g)) throw ValidationError("graph must be connected");
  const auto m = g.vertex_count();
  if (m < 2) throw ValidationError("graph needs at least 2 vertices");
  AlphaReduction r;
  r.m = m;
  r.cone_graph = cone(g, m);
  const auto& c = r.cone_graph;
  if (solver == AlphaSolver::kGonality) {
    GonalityOptions opt;
    opt.upper = static_cast<std::int64_t>(2 * m);
    opt.threads = threads;
    r.cone_value = static_cast<std::uint64_t>(gonality(c, opt).value);
  } else {
    if (min_degree(c) < c.vertex_count() / 2 + 1)
      throw HypothesisError("cone misses the minimum-degree condition");
    const auto order = scramble_order(edge_scramble(c));
    const auto witness = detail::cover_divisor(c.vertex_count(), order.hitting_set);
    if (!has_positive_rank(c, witness) || order.hitting != order.order)
      throw SoundnessError("scramble sandwich on the cone did not close");
    r.cone_value = order.order;
  }
  if (r.cone_value > 2 * m) throw SoundnessError("cone gonality exceeds 2m");
  r.alpha = 2 * m - r.cone_value;
  if (r.alpha != independence_number(g))
    throw SoundnessError("recovered alpha disagrees with the direct computation");
  return r;
}

}  // namespace chipfire
