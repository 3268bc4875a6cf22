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
#include <vector>

#include "chipfire/vertex_set.hpp"

namespace chipfire {

struct HittingSet {
  std::size_t size = 0;
  VertexSet set;
};

namespace detail {

class HittingSetSearch {
 public:
  HittingSetSearch(const std::vector<VertexSet>& sets, std::size_t n)
      : sets_(sets), n_(n) {}

  HittingSet run() {
    best_ = greedy();
    VertexSet chosen(n_), forbidden(n_);
    search(chosen, forbidden);
    return {best_.size(), best_};
  }

 private:
  VertexSet greedy() const {
    VertexSet chosen(n_);
    std::vector<bool> hit(sets_.size(), false);
    while (true) {
      std::vector<std::size_t> score(n_, 0);
      bool open = false;
      for (std::size_t i = 0; i < sets_.size(); ++i)
        if (!hit[i]) {
          open = true;
          sets_[i].for_each([&](Vertex v) { ++score[v]; });
        }
      if (!open) return chosen;
      const Vertex v = static_cast<Vertex>(
          std::max_element(score.begin(), score.end()) - score.begin());
      chosen.insert(v);
      for (std::size_t i = 0; i < sets_.size(); ++i)
        if (sets_[i].contains(v)) hit[i] = true;
    }
  }

  // Pairwise disjoint unhit sets (restricted to allowed vertices) each need
  // their own hitter.
  std::size_t packing_bound(const std::vector<VertexSet>& open) const {
    VertexSet used(n_);
    std::size_t count = 0;
    for (const auto& s : open)
      if (!s.intersects(used)) {
        used |= s;
        ++count;
      }
    return count;
  }

  void search(VertexSet& chosen, VertexSet& forbidden) {
    std::vector<VertexSet> open;
    for (const auto& s : sets_)
      if (!s.intersects(chosen)) open.push_back(s - forbidden);
    const std::size_t have = chosen.size();
    if (open.empty()) {
      if (have < best_.size()) best_ = chosen;
      return;
    }
    std::sort(open.begin(), open.end(), [](const VertexSet& a, const VertexSet& b) {
      return a.size() < b.size();
    });
    if (open.front().empty()) return;
    if (have + packing_bound(open) >= best_.size()) return;

    const VertexSet branch = open.front();
    const VertexSet saved = forbidden;
    branch.for_each([&](Vertex v) {
      if (have + 1 >= best_.size()) return;
      chosen.insert(v);
      search(chosen, forbidden);
      chosen.erase(v);
      forbidden.insert(v);
    });
    forbidden = saved;
  }

  const std::vector<VertexSet>& sets_;
  std::size_t n_;
  VertexSet best_;
};

}  // namespace detail

// Exact minimum hitting set by branch and bound: branch on the vertices of
// the smallest unhit set, bound by a greedy packing of disjoint unhit sets.
inline HittingSet minimum_hitting_set(const std::vector<VertexSet>& sets,
                                      std::size_t n) {
  for (const auto& s : sets)
    if (s.host_size() != n || s.empty())
      throw ValidationError("hitting-set instance has an empty or foreign set");
  return detail::HittingSetSearch(sets, n).run();
}

}  // namespace chipfire
