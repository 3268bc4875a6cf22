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
#include <limits>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include "chipfire/invariants.hpp"
#include "chipfire/multigraph.hpp"

namespace chipfire {

// Integer chip count per vertex; entries may be negative (debt).
class Divisor {
 public:
  Divisor() = default;
  explicit Divisor(std::size_t n) : chips_(n, 0) {}
  explicit Divisor(std::vector<std::int64_t> chips)
      : chips_(std::move(chips)) {}

  // The divisor (v) on n vertices.
  static Divisor point(std::size_t n, Vertex v) {
    Divisor d(n);
    d.chips_.at(v) = 1;
    return d;
  }

  std::size_t size() const { return chips_.size(); }
  std::int64_t operator[](Vertex v) const { return chips_[v]; }
  std::int64_t& operator[](Vertex v) { return chips_[v]; }
  const std::vector<std::int64_t>& chips() const { return chips_; }

  std::int64_t degree() const {
    return std::accumulate(chips_.begin(), chips_.end(), std::int64_t{0});
  }
  bool is_effective() const {
    return std::all_of(chips_.begin(), chips_.end(),
                       [](std::int64_t c) { return c >= 0; });
  }

  Divisor& operator+=(const Divisor& o) {
    same_size(o);
    for (std::size_t i = 0; i < chips_.size(); ++i) chips_[i] += o.chips_[i];
    return *this;
  }
  Divisor& operator-=(const Divisor& o) {
    same_size(o);
    for (std::size_t i = 0; i < chips_.size(); ++i) chips_[i] -= o.chips_[i];
    return *this;
  }
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend bool operator==(const Divisor&, const Divisor&) = default;
  friend auto operator<=>(const Divisor&, const Divisor&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < chips_.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(chips_[i]);
    }
    return s + ")";
  }

 private:
  void same_size(const Divisor& o) const {
    if (o.size() != size()) throw ValidationError("divisor sizes differ");
  }
  std::vector<std::int64_t> chips_;
};

namespace detail {

inline void check_divisor(const Multigraph& g, const Divisor& d) {
  if (d.size() != g.vertex_count())
    throw ValidationError("divisor has " + std::to_string(d.size()) +
                          " entries but the graph has " +
                          std::to_string(g.vertex_count()) + " vertices");
}

inline void check_vertex(const Multigraph& g, Vertex v) {
  if (v >= g.vertex_count())
    throw ValidationError("vertex " + std::to_string(v) + " out of range");
}

// Fires `set` `times` times in place.
inline void fire_in_place(const Multigraph& g, std::vector<std::int64_t>& c,
                          const VertexSet& set, std::int64_t times) {
  set.for_each([&](Vertex u) {
    for (const auto& nb : g.neighbors(u))
      if (!set.contains(nb.vertex)) {
        const auto m = static_cast<std::int64_t>(nb.count) * times;
        c[u] -= m;
        c[nb.vertex] += m;
      }
  });
}

}  // namespace detail

inline Divisor fire(const Multigraph& g, Divisor d, Vertex v) {
  detail::check_divisor(g, d);
  detail::check_vertex(g, v);
  d[v] -= static_cast<std::int64_t>(g.valence(v));
  for (const auto& nb : g.neighbors(v))
    d[nb.vertex] += static_cast<std::int64_t>(nb.count);
  return d;
}

// Fires every vertex of `set` once. Only edges leaving the set move chips.
inline Divisor fire_set(const Multigraph& g, Divisor d, const VertexSet& set) {
  detail::check_divisor(g, d);
  if (set.host_size() != g.vertex_count())
    throw ValidationError("vertex set host does not match graph");
  std::vector<std::int64_t> c = d.chips();
  detail::fire_in_place(g, c, set, 1);
  return Divisor(std::move(c));
}

struct BurnResult {
  VertexSet burned;
  VertexSet unburned;
};

namespace detail {

// Burned set of the fire started at q, for chip vector c that is
// nonnegative off q.
inline VertexSet burn(const Multigraph& g, const std::vector<std::int64_t>& c,
                      Vertex q) {
  const std::size_t n = g.vertex_count();
  VertexSet burned(n);
  std::vector<std::int64_t> heat(n, 0);
  std::vector<Vertex> frontier{q};
  burned.insert(q);
  while (!frontier.empty()) {
    const Vertex u = frontier.back();
    frontier.pop_back();
    for (const auto& nb : g.neighbors(u)) {
      const Vertex w = nb.vertex;
      if (burned.contains(w)) continue;
      heat[w] += nb.count;
      if (heat[w] > c[w]) {
        burned.insert(w);
        frontier.push_back(w);
      }
    }
  }
  return burned;
}

// Largest k such that firing `unburned` k times keeps every vertex of it
// nonnegative. At least 1 whenever Dhar's fire stopped short of it.
inline std::int64_t safe_repeats(const Multigraph& g,
                                 const std::vector<std::int64_t>& c,
                                 const VertexSet& unburned) {
  std::int64_t k = FlowNetwork::kInfinite;
  unburned.for_each([&](Vertex u) {
    std::int64_t out = 0;
    for (const auto& nb : g.neighbors(u))
      if (!unburned.contains(nb.vertex)) out += nb.count;
    if (out > 0) k = std::min(k, c[u] / out);
  });
  return std::max<std::int64_t>(k, 1);
}

}  // namespace detail

// Dhar's burning process from q. Chips on q itself are ignored.
inline BurnResult dhar_burn(const Multigraph& g, const Divisor& d, Vertex q) {
  detail::check_divisor(g, d);
  detail::check_vertex(g, q);
  for (Vertex v = 0; v < d.size(); ++v)
    if (v != q && d[v] < 0)
      throw ValidationError("burning needs a divisor effective away from q");
  BurnResult r;
  r.burned = detail::burn(g, d.chips(), q);
  r.unburned = r.burned.complement();
  return r;
}

inline bool is_q_reduced(const Multigraph& g, const Divisor& d, Vertex q) {
  detail::check_divisor(g, d);
  detail::check_vertex(g, q);
  for (Vertex v = 0; v < d.size(); ++v)
    if (v != q && d[v] < 0) return false;
  return detail::burn(g, d.chips(), q).is_full();
}

// One step of a firing script: fire `set` `times` times.
struct FiringStep {
  VertexSet set;
  std::int64_t times = 1;
};

struct Reduction {
  Divisor reduced;
  std::vector<FiringStep> script;
};

inline Divisor replay(const Multigraph& g, const Divisor& d,
                      const std::vector<FiringStep>& script) {
  detail::check_divisor(g, d);
  std::vector<std::int64_t> c = d.chips();
  for (const auto& step : script) detail::fire_in_place(g, c, step.set, step.times);
  return Divisor(std::move(c));
}

// The unique q-reduced divisor equivalent to d, with a firing script that
// turns d into it.
//
// Debt away from q is cleared layer by layer: with B_k the vertices within
// BFS distance k of q, firing B_k feeds every vertex of layer k+1 and only
// costs chips in layer k. Processing k from the outermost layer inwards
// leaves every layer beyond q nonnegative. Then the unburned part of
// Dhar's fire is fired (as many times at once as stays legal) until the
// whole graph burns.
inline Reduction q_reduce_with_script(const Multigraph& g, const Divisor& d,
                                      Vertex q) {
  detail::check_divisor(g, d);
  detail::check_vertex(g, q);
  if (!is_connected(g))
    throw ValidationError("q-reduction requires a connected graph");
  const std::size_t n = g.vertex_count();
  std::vector<std::int64_t> c = d.chips();
  Reduction out;

  std::vector<std::size_t> dist(n, n);
  std::vector<Vertex> order{q};
  dist[q] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const auto& nb : g.neighbors(order[i]))
      if (dist[nb.vertex] == n) {
        dist[nb.vertex] = dist[order[i]] + 1;
        order.push_back(nb.vertex);
      }
  const std::size_t depth = dist[order.back()];
  for (std::size_t k = depth; k-- > 0;) {
    VertexSet ball(n);
    for (Vertex v = 0; v < n; ++v)
      if (dist[v] <= k) ball.insert(v);
    std::int64_t times = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (dist[v] != k + 1 || c[v] >= 0) continue;
      std::int64_t gain = 0;
      for (const auto& nb : g.neighbors(v))
        if (ball.contains(nb.vertex)) gain += nb.count;
      times = std::max(times, (-c[v] + gain - 1) / gain);
    }
    if (times > 0) {
      detail::fire_in_place(g, c, ball, times);
      out.script.push_back({std::move(ball), times});
    }
  }

  while (true) {
    const VertexSet burned = detail::burn(g, c, q);
    if (burned.is_full()) break;
    VertexSet unburned = burned.complement();
    const std::int64_t times = detail::safe_repeats(g, c, unburned);
    detail::fire_in_place(g, c, unburned, times);
    out.script.push_back({std::move(unburned), times});
  }
  out.reduced = Divisor(std::move(c));
  return out;
}

inline Divisor q_reduce(const Multigraph& g, const Divisor& d, Vertex q) {
  return q_reduce_with_script(g, d, q).reduced;
}

inline bool equivalent(const Multigraph& g, const Divisor& a,
                       const Divisor& b) {
  return q_reduce(g, a, 0) == q_reduce(g, b, 0);
}

inline bool equivalent_to_effective(const Multigraph& g, const Divisor& d,
                                    Vertex q = 0) {
  return q_reduce(g, d, q)[q] >= 0;
}

namespace detail {

// Whether c - (q) can be made effective, for c effective with c[q] == 0.
// Works on a scratch copy and stops as soon as q is out of debt.
inline bool debt_at_removable(const Multigraph& g, std::vector<std::int64_t> c,
                              Vertex q) {
  c[q] -= 1;
  while (c[q] < 0) {
    const VertexSet burned = burn(g, c, q);
    if (burned.is_full()) return false;
    const VertexSet unburned = burned.complement();
    fire_in_place(g, c, unburned, safe_repeats(g, c, unburned));
  }
  return true;
}

// Calls f(chips) for every vector with chips[v] in [0, cap[v]] summing to
// `total`, in increasing lexicographic order; stops when f returns true.
template <typename F>
bool for_each_bounded_composition(const std::vector<std::int64_t>& cap,
                                  std::int64_t total, F&& f) {
  const std::size_t n = cap.size();
  std::vector<std::int64_t> suffix(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + cap[i];
  std::vector<std::int64_t> cur(n, 0);
  // `left` is the amount still to place at positions i..n-1.
  auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> bool {
    if (i == n) return left == 0 && f(cur);
    const std::int64_t lo = std::max<std::int64_t>(0, left - suffix[i + 1]);
    const std::int64_t hi = std::min(cap[i], left);
    for (std::int64_t x = lo; x <= hi; ++x) {
      cur[i] = x;
      if (self(self, i + 1, left - x)) return true;
    }
    cur[i] = 0;
    return false;
  };
  return rec(rec, 0, total);
}

}  // namespace detail

// Whether an effective divisor has rank at least one.
inline bool has_positive_rank(const Multigraph& g, const Divisor& d) {
  detail::check_divisor(g, d);
  if (!d.is_effective())
    throw ValidationError("positive-rank test needs an effective divisor");
  if (!is_connected(g))
    throw ValidationError("rank requires a connected graph");
  for (Vertex v = 0; v < d.size(); ++v)
    if (d[v] == 0 && !detail::debt_at_removable(g, d.chips(), v)) return false;
  return true;
}

// Rank truncated at `cap`: -1 if d is not equivalent to an effective
// divisor, otherwise the largest r <= cap such that d - e is equivalent to an
// effective divisor for every effective e of degree r.
inline std::int64_t rank(const Multigraph& g, const Divisor& d,
                         std::int64_t cap) {
  detail::check_divisor(g, d);
  if (cap < 0) throw ValidationError("rank cap must be nonnegative");
  if (!is_connected(g))
    throw ValidationError("rank requires a connected graph");
  if (!equivalent_to_effective(g, d, 0)) return -1;
  const std::size_t n = g.vertex_count();
  for (std::int64_t r = 1; r <= cap; ++r) {
    bool all_ok = true;
    detail::for_each_bounded_composition(
        std::vector<std::int64_t>(n, r), r, [&](const std::vector<std::int64_t>& e) {
          Divisor rest = d - Divisor(e);
          Vertex q = 0;
          while (e[q] == 0) ++q;
          if (!equivalent_to_effective(g, rest, q)) {
            all_ok = false;
            return true;
          }
          return false;
        });
    if (!all_ok) return r - 1;
  }
  return cap;
}

}  // namespace chipfire
