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

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "chipfire/errors.hpp"

namespace chipfire {

using Vertex = std::size_t;

// Dense subset of {0, ..., n-1}. The host size n is part of the value: two
// sets over different hosts never compare equal.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}
  VertexSet(std::size_t n, std::initializer_list<Vertex> members)
      : VertexSet(n) {
    for (Vertex v : members) insert(v);
  }
  template <typename Range>
  static VertexSet from_range(std::size_t n, const Range& members) {
    VertexSet s(n);
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }
  static VertexSet full(std::size_t n) {
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v) s.words_[v / 64] |= bit(v);
    return s;
  }

  std::size_t host_size() const { return n_; }

  bool contains(Vertex v) const {
    return v < n_ && (words_[v / 64] & bit(v)) != 0;
  }
  void insert(Vertex v) {
    check(v);
    words_[v / 64] |= bit(v);
  }
  void erase(Vertex v) {
    check(v);
    words_[v / 64] &= ~bit(v);
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool is_full() const { return size() == n_; }

  VertexSet complement() const {
    VertexSet out(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
    out.trim();
    return out;
  }
  bool intersects(const VertexSet& other) const {
    same_host(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& other) const {
    same_host(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  VertexSet& operator|=(const VertexSet& o) {
    same_host(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    same_host(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    same_host(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  // Members in increasing order.
  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        const int b = std::countr_zero(w);
        f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
  }
  // Smallest member, or host_size() when empty.
  Vertex first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i])
        return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return n_;
  }

  std::string to_string() const {
    std::string s = "{";
    bool sep = false;
    for_each([&](Vertex v) {
      if (sep) s += ',';
      s += std::to_string(v);
      sep = true;
    });
    return s + "}";
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  // Orders by host size, then by the membership bit vector read from the
  // highest word down. Only used for canonical sorting.
  friend std::strong_ordering operator<=>(const VertexSet& a,
                                          const VertexSet& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    for (std::size_t i = a.words_.size(); i-- > 0;)
      if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<std::size_t>{}(n_);
    for (auto w : words_)
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    return h;
  }

 private:
  static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v % 64); }
  void check(Vertex v) const {
    if (v >= n_)
      throw ValidationError("vertex " + std::to_string(v) +
                            " out of range for host of size " +
                            std::to_string(n_));
  }
  void same_host(const VertexSet& o) const {
    if (o.n_ != n_) throw ValidationError("vertex sets over different hosts");
  }
  void trim() {
    if (n_ % 64 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace chipfire
