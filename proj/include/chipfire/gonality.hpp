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
#include <thread>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/invariants.hpp"

namespace chipfire {

// Which effective divisors the gonality search enumerates at each degree.
enum class SearchPruning {
  // Every effective divisor.
  kNone,
  // At most val(v) - 1 chips per vertex, applied only at degrees
  // d <= |E| - |V| (where such a representative always exists).
  kValence,
  // Divisors reduced with respect to the base vertex carrying at least one
  // chip there. Reducedness already caps every other vertex at val(v) - 1.
  kReduced,
};

struct GonalityOptions {
  std::optional<std::int64_t> lower;  // default max(1, min(lambda, n))
  std::optional<std::int64_t> upper;  // default genus + 1, and n - alpha if simple
  SearchPruning pruning = SearchPruning::kReduced;
  Vertex base = 0;
  unsigned threads = 1;
};

struct GonalityResult {
  std::int64_t value = 0;
  Divisor witness;                // effective, rank >= 1, degree == value
  std::uint64_t candidates = 0;   // divisors handed to the rank test
};

inline std::int64_t default_gonality_lower(const Multigraph& g) {
  const auto lambda = static_cast<std::int64_t>(edge_connectivity(g));
  return std::max<std::int64_t>(
      1, std::min(lambda, static_cast<std::int64_t>(g.vertex_count())));
}

// genus + 1 always carries a positive-rank divisor (Riemann-Roch); for a
// simple graph one chip off a maximum independent set does too.
inline std::int64_t default_gonality_upper(const Multigraph& g) {
  std::int64_t up = cycle_rank(g) + 1;
  if (g.is_simple())
    up = std::min(up, static_cast<std::int64_t>(g.vertex_count() -
                                                independence_number(g)));
  return std::max<std::int64_t>(up, 1);
}

namespace detail {

class CandidateBatch {
 public:
  CandidateBatch(const Multigraph& g, SearchPruning pruning, Vertex base,
                 unsigned threads)
      : g_(g), pruning_(pruning), base_(base), threads_(std::max(1u, threads)) {}

  // Returns true once a positive-rank candidate has been found.
  bool offer(const std::vector<std::int64_t>& chips) {
    pending_.push_back(chips);
    if (pending_.size() >= 1024 * threads_) return flush();
    return false;
  }

  bool flush() {
    if (pending_.empty()) return false;
    std::vector<std::size_t> hit(threads_, pending_.size());
    auto work = [&](unsigned t) {
      for (std::size_t i = t; i < pending_.size(); i += threads_)
        if (accept(pending_[i])) {
          hit[t] = i;
          return;
        }
    };
    if (threads_ == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads_; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    checked_ += pending_.size();
    const std::size_t first = *std::min_element(hit.begin(), hit.end());
    if (first < pending_.size()) {
      // Each thread stops at its own first hit, so the smallest of those
      // hits is the smallest accepted index of the batch.
      winner_ = Divisor(pending_[first]);
      pending_.clear();
      return true;
    }
    pending_.clear();
    return false;
  }

  const std::optional<Divisor>& winner() const { return winner_; }
  std::uint64_t checked() const { return checked_; }

 private:
  bool accept(const std::vector<std::int64_t>& chips) const {
    Divisor d(chips);
    if (pruning_ == SearchPruning::kReduced && !burn(g_, chips, base_).is_full())
      return false;
    return has_positive_rank(g_, d);
  }

  const Multigraph& g_;
  SearchPruning pruning_;
  Vertex base_;
  unsigned threads_;
  std::vector<std::vector<std::int64_t>> pending_;
  std::optional<Divisor> winner_;
  std::uint64_t checked_ = 0;
};

}  // namespace detail

// Exact divisorial gonality with a positive-rank witness. Degrees are tried
// from the lower bound upwards; within a degree candidates are visited in
// increasing lexicographic order of their chip vectors and the first
// positive-rank one is returned.
inline GonalityResult gonality(const Multigraph& g,
                               const GonalityOptions& opt = {}) {
  if (!is_connected(g))
    throw ValidationError("gonality requires a connected graph");
  const std::size_t n = g.vertex_count();
  if (opt.base >= n) throw ValidationError("base vertex out of range");
  const std::int64_t lower = opt.lower.value_or(default_gonality_lower(g));
  const std::int64_t upper = opt.upper.value_or(default_gonality_upper(g));
  if (lower < 0 || upper < lower)
    throw ValidationError("gonality search bounds are inconsistent");
  const auto slack = static_cast<std::int64_t>(g.edge_count()) -
                     static_cast<std::int64_t>(n);

  GonalityResult out;
  for (std::int64_t d = std::max<std::int64_t>(lower, 1); d <= upper; ++d) {
    std::vector<std::int64_t> cap(n, d);
    const bool reduced = opt.pruning == SearchPruning::kReduced;
    if (reduced || (opt.pruning == SearchPruning::kValence && d <= slack))
      for (Vertex v = 0; v < n; ++v)
        cap[v] = std::min<std::int64_t>(
            d, static_cast<std::int64_t>(g.valence(v)) - 1);
    if (reduced) cap[opt.base] = d;

    detail::CandidateBatch batch(g, opt.pruning, opt.base, opt.threads);
    detail::for_each_bounded_composition(
        cap, d, [&](const std::vector<std::int64_t>& chips) {
          if (reduced && chips[opt.base] == 0) return false;
          return batch.offer(chips);
        });
    batch.flush();
    out.candidates += batch.checked();
    if (batch.winner()) {
      out.value = d;
      out.witness = *batch.winner();
      return out;
    }
  }
  throw SoundnessError("no positive-rank divisor up to the stated upper bound " +
                       std::to_string(upper));
}

}  // namespace chipfire
