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
#include <queue>
#include <vector>

#include "chipfire/multigraph.hpp"

namespace chipfire {

// Dinic max-flow on a directed network with integer capacities.
class FlowNetwork {
 public:
  static constexpr std::int64_t kInfinite =
      std::numeric_limits<std::int64_t>::max() / 4;

  explicit FlowNetwork(std::size_t nodes) : head_(nodes, -1) {}

  std::size_t node_count() const { return head_.size(); }

  void add_arc(std::size_t from, std::size_t to, std::int64_t cap) {
    push(from, to, cap);
    push(to, from, 0);
  }
  // Undirected edge of capacity `cap` in both directions.
  void add_edge(std::size_t a, std::size_t b, std::int64_t cap) {
    push(a, b, cap);
    push(b, a, cap);
  }

  std::int64_t max_flow(std::size_t s, std::size_t t, std::int64_t limit =
                                                          kInfinite) {
    std::int64_t flow = 0;
    while (flow < limit && bfs(s, t)) {
      it_ = head_;
      while (flow < limit) {
        const std::int64_t f = dfs(s, t, limit - flow);
        if (f == 0) break;
        flow += f;
      }
    }
    return flow;
  }

  // Nodes reachable from s in the residual network; after max_flow this is
  // the source side of a minimum cut.
  std::vector<bool> source_side(std::size_t s) const {
    std::vector<bool> seen(head_.size(), false);
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (int a = head_[u]; a != -1; a = arcs_[a].next)
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = true;
          stack.push_back(arcs_[a].to);
        }
    }
    return seen;
  }

 private:
  struct Arc {
    std::size_t to;
    int next;
    std::int64_t cap;
  };

  void push(std::size_t from, std::size_t to, std::int64_t cap) {
    arcs_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(arcs_.size() - 1);
  }

  bool bfs(std::size_t s, std::size_t t) {
    level_.assign(head_.size(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (int a = head_[u]; a != -1; a = arcs_[a].next)
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[u] + 1;
          q.push(arcs_[a].to);
        }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(std::size_t u, std::size_t t, std::int64_t pushed) {
    if (u == t) return pushed;
    for (int& a = it_[u]; a != -1; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap <= 0 || level_[arc.to] != level_[u] + 1) continue;
      const std::int64_t f = dfs(arc.to, t, std::min(pushed, arc.cap));
      if (f > 0) {
        arc.cap -= f;
        arcs_[a ^ 1].cap += f;
        return f;
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> it_;
};

struct EdgeCut {
  std::int64_t size = 0;
  VertexSet source_side;  // contains every source vertex, no sink vertex
};

// Minimum number of edges (with multiplicity) whose removal separates every
// vertex of `sources` from every vertex of `sinks`. Both sets are contracted
// to single terminals. The sets must be nonempty and disjoint.
// With `limit`, stops once the cut is known to be at least `limit`; the
// reported size is then `limit` and the side is not a minimum cut.
inline EdgeCut min_edge_cut(const Multigraph& g, const VertexSet& sources,
                            const VertexSet& sinks,
                            std::int64_t limit = FlowNetwork::kInfinite) {
  const std::size_t n = g.vertex_count();
  if (sources.empty() || sinks.empty())
    throw ValidationError("cut terminals must be nonempty");
  if (sources.intersects(sinks))
    throw ValidationError("cut terminals must be disjoint");
  FlowNetwork net(n + 2);
  const std::size_t s = n, t = n + 1;
  for (const auto& e : g.edges()) net.add_edge(e.u, e.v, e.count);
  sources.for_each([&](Vertex v) { net.add_arc(s, v, FlowNetwork::kInfinite); });
  sinks.for_each([&](Vertex v) { net.add_arc(v, t, FlowNetwork::kInfinite); });
  EdgeCut cut;
  cut.size = std::min(net.max_flow(s, t, limit), limit);
  const auto side = net.source_side(s);
  cut.source_side = VertexSet(n);
  for (Vertex v = 0; v < n; ++v)
    if (side[v]) cut.source_side.insert(v);
  return cut;
}

// Maximum number of internally vertex-disjoint s-t paths, for s, t not
// adjacent. Each vertex other than s, t gets capacity one.
inline std::int64_t local_vertex_connectivity(const Multigraph& g, Vertex s,
                                              Vertex t) {
  const std::size_t n = g.vertex_count();
  if (s == t) throw ValidationError("terminals must differ");
  if (g.adjacent(s, t))
    throw ValidationError("vertex connectivity needs non-adjacent terminals");
  // v_in = v, v_out = v + n.
  FlowNetwork net(2 * n);
  for (Vertex v = 0; v < n; ++v)
    net.add_arc(v, v + n, (v == s || v == t) ? FlowNetwork::kInfinite : 1);
  for (const auto& e : g.edges()) {
    net.add_arc(e.u + n, e.v, FlowNetwork::kInfinite);
    net.add_arc(e.v + n, e.u, FlowNetwork::kInfinite);
  }
  return net.max_flow(s + n, t);
}

}  // namespace chipfire
