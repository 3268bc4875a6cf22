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
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "chipfire/flow.hpp"
#include "chipfire/invariants.hpp"
#include "chipfire/scramble.hpp"

namespace chipfire {

struct BruteForceScrambleResult {
  std::uint64_t value = 0;
  std::optional<Scramble> witness;
  // False when the candidate pool was truncated by the egg budget; value is
  // then only a lower bound.
  bool exact = false;
  std::size_t candidate_eggs = 0;
};

namespace detail {

// Scramble-number oracle over bitmask-encoded vertex sets (n <= 20).
//
// A family of connected sets has order >= k iff it cannot be hit by k-1
// vertices and every two disjoint members are at edge distance >= k. The
// second condition is pairwise, so order-k families are exactly the cliques
// of a compatibility graph whose hitting number is >= k. Hitting number is
// monotone under adding sets, so it suffices to search cliques with the
// bound h(R u P) >= k.
class ScrambleOracle {
 public:
  ScrambleOracle(const Multigraph& g, std::vector<std::uint32_t> eggs)
      : g_(g), n_(g.vertex_count()), eggs_(std::move(eggs)) {
    const std::size_t m = eggs_.size();
    cut_.assign(m * m, 0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if ((eggs_[i] & eggs_[j]) == 0) {
          const auto c = min_edge_cut(g_, to_set(eggs_[i]), to_set(eggs_[j])).size;
          cut_[i * m + j] = cut_[j * m + i] = c;
        }
  }

  // Clique of order >= k, if one exists.
  std::optional<std::vector<std::size_t>> find(std::uint64_t k) {
    const std::size_t m = eggs_.size();
    level_ = k;
    adj_.assign(m, VertexSet(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (i != j && compatible(i, j)) adj_[i].insert(j);
    found_.reset();
    std::vector<std::size_t> r;
    expand(r, VertexSet::full(m), VertexSet(m));
    return found_;
  }

  VertexSet to_set(std::uint32_t mask) const {
    VertexSet s(n_);
    for (Vertex v = 0; v < n_; ++v)
      if (mask >> v & 1u) s.insert(v);
    return s;
  }

 private:
  bool compatible(std::size_t i, std::size_t j) const {
    return (eggs_[i] & eggs_[j]) != 0 ||
           static_cast<std::uint64_t>(cut_[i * eggs_.size() + j]) >= level_;
  }

  // Whether some set of k-1 vertices meets every egg listed.
  bool hittable_below(const std::vector<std::uint32_t>& fam,
                      std::uint64_t k) const {
    if (k == 0) return true;
    if (fam.empty()) return true;
    const std::uint32_t limit = 1u << n_;
    for (std::uint32_t c = 0; c < limit; ++c) {
      if (static_cast<std::uint64_t>(std::popcount(c)) != k - 1) continue;
      if (std::all_of(fam.begin(), fam.end(),
                      [&](std::uint32_t e) { return (e & c) != 0; }))
        return true;
    }
    return false;
  }

  void expand(std::vector<std::size_t>& r, VertexSet p, VertexSet x) {
    if (found_) return;
    std::vector<std::uint32_t> fam;
    for (auto i : r) fam.push_back(eggs_[i]);
    if (!r.empty() && !hittable_below(fam, level_)) {
      found_ = r;
      return;
    }
    p.for_each([&](Vertex i) { fam.push_back(eggs_[i]); });
    if (hittable_below(fam, level_)) return;
    // Pivot on the vertex of P u X with the most neighbours in P.
    std::size_t pivot = 0, best = 0;
    bool have = false;
    (p | x).for_each([&](Vertex u) {
      const std::size_t d = (adj_[u] & p).size();
      if (!have || d > best) {
        pivot = u;
        best = d;
        have = true;
      }
    });
    const VertexSet branch = have ? p - adj_[pivot] : p;
    branch.for_each([&](Vertex v) {
      if (found_ || !p.contains(v)) return;
      r.push_back(v);
      expand(r, p & adj_[v], x & adj_[v]);
      r.pop_back();
      p.erase(v);
      x.insert(v);
    });
  }

  const Multigraph& g_;
  std::size_t n_;
  std::vector<std::uint32_t> eggs_;
  std::vector<std::int64_t> cut_;
  std::vector<VertexSet> adj_;
  std::uint64_t level_ = 0;
  std::optional<std::vector<std::size_t>> found_;
};

}  // namespace detail

// Exhaustive scramble number for graphs on at most 20 vertices (practical
// up to about 8). Candidate eggs are the connected vertex subsets; with
// max_eggs > 0 only the max_eggs smallest are used and the result is
// flagged inexact if any were left out.
inline BruteForceScrambleResult brute_force_sn(const Multigraph& g,
                                               std::size_t max_eggs = 0) {
  const std::size_t n = g.vertex_count();
  if (n > 20) throw ValidationError("brute-force scramble search needs n <= 20");
  std::vector<std::uint32_t> pool;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1u) s.insert(v);
    if (is_connected_subset(g, s)) pool.push_back(mask);
  }
  std::stable_sort(pool.begin(), pool.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  BruteForceScrambleResult out;
  out.exact = true;
  if (max_eggs > 0 && pool.size() > max_eggs) {
    pool.resize(max_eggs);
    out.exact = false;
  }
  out.candidate_eggs = pool.size();

  detail::ScrambleOracle oracle(g, pool);
  for (std::uint64_t k = n; k >= 1; --k) {
    auto clique = oracle.find(k);
    if (!clique) continue;
    std::vector<VertexSet> eggs;
    for (auto i : *clique) eggs.push_back(oracle.to_set(pool[i]));
    Scramble s(g, std::move(eggs));
    const auto ord = scramble_order(s);
    if (ord.order < k)
      throw SoundnessError("oracle clique does not reach its order level");
    out.value = ord.order;
    out.witness = std::move(s);
    return out;
  }
  return out;
}

}  // namespace chipfire
