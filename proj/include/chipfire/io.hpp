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

#include <cctype>
#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/errors.hpp"
#include "chipfire/multigraph.hpp"
#include "chipfire/scramble.hpp"

namespace chipfire::io {

namespace detail {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

// Lines split into whitespace-separated tokens with 1-based positions.
// Comment lines (first non-blank character '#') and blank lines are dropped.
inline std::vector<std::vector<Token>> tokenize(std::istream& in) {
  std::vector<std::vector<Token>> lines;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      if (toks.empty() && raw[i] == '#') break;
      const std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      toks.push_back({raw.substr(start, i - start), lineno, start + 1});
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

inline std::int64_t integer(const Token& t, const char* what) {
  std::int64_t v = 0;
  const char* b = t.text.data();
  const char* e = b + t.text.size();
  if (*b == '+') ++b;
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e)
    throw ParseError(std::string("expected ") + what + ", got '" + t.text + "'",
                     t.line, t.column);
  return v;
}

inline std::uint64_t natural(const Token& t, const char* what) {
  const auto v = integer(t, what);
  if (v < 0)
    throw ParseError(std::string(what) + " must be nonnegative", t.line, t.column);
  return static_cast<std::uint64_t>(v);
}

inline std::size_t last_line(const std::vector<std::vector<Token>>& lines) {
  return lines.empty() ? 1 : lines.back().front().line;
}

}  // namespace detail

// MEL v1: header "n m", then m lines "u v [k]". Repeated pairs accumulate.
inline Multigraph read_mel(std::istream& in) {
  const auto lines = detail::tokenize(in);
  if (lines.empty()) throw ParseError("empty input, expected header 'n m'", 1, 1);
  const auto& head = lines.front();
  if (head.size() != 2)
    throw ParseError("header must be 'n m'", head.front().line,
                     head.size() > 2 ? head[2].column : 0);
  const auto n = detail::natural(head[0], "vertex count");
  const auto m = detail::natural(head[1], "edge line count");
  if (n < 1) throw ParseError("vertex count must be at least 1", head[0].line, head[0].column);
  if (lines.size() - 1 != m)
    throw ParseError("header announces " + std::to_string(m) + " edge lines, found " +
                         std::to_string(lines.size() - 1),
                     lines.size() - 1 > m ? lines[m + 1].front().line
                                          : detail::last_line(lines),
                     0);
  std::vector<EdgeSpec> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.size() < 2 || l.size() > 3)
      throw ParseError("edge line must be 'u v' or 'u v k'", l.front().line,
                       l.size() > 3 ? l[3].column : 0);
    const auto u = detail::natural(l[0], "vertex");
    const auto v = detail::natural(l[1], "vertex");
    const auto k = l.size() == 3 ? detail::natural(l[2], "multiplicity") : 1;
    if (u >= n) throw ParseError("vertex out of range", l[0].line, l[0].column);
    if (v >= n) throw ParseError("vertex out of range", l[1].line, l[1].column);
    if (u == v) throw ParseError("loop edge", l[1].line, l[1].column);
    if (k < 1 || k > 0xffffffffu)
      throw ParseError("multiplicity must be a positive 32-bit count", l[2].line,
                       l[2].column);
    edges.push_back({u, v, static_cast<Multiplicity>(k)});
  }
  return Multigraph::from_edge_list(n, edges);
}

inline Multigraph parse_mel(const std::string& text) {
  std::istringstream in(text);
  return read_mel(in);
}

inline void write_mel(std::ostream& out, const Multigraph& g) {
  const auto edges = g.edges();
  out << g.vertex_count() << ' ' << edges.size() << '\n';
  for (const auto& e : edges) out << e.u << ' ' << e.v << ' ' << e.count << '\n';
}

inline std::string to_mel(const Multigraph& g) {
  std::ostringstream out;
  write_mel(out, g);
  return out.str();
}

// "n" followed by n integers, any whitespace layout.
inline Divisor read_divisor(std::istream& in, std::size_t expected_n) {
  const auto lines = detail::tokenize(in);
  std::vector<detail::Token> toks;
  for (const auto& l : lines) toks.insert(toks.end(), l.begin(), l.end());
  if (toks.empty()) throw ParseError("empty divisor, expected chip count n", 1, 1);
  const auto n = detail::natural(toks[0], "chip vector length");
  if (n != expected_n)
    throw ParseError("divisor has " + std::to_string(n) + " entries but the graph has " +
                         std::to_string(expected_n) + " vertices",
                     toks[0].line, toks[0].column);
  if (toks.size() != n + 1)
    throw ParseError("expected " + std::to_string(n) + " chip values, found " +
                         std::to_string(toks.size() - 1),
                     toks.back().line, 0);
  Divisor d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = detail::integer(toks[i + 1], "chip count");
  return d;
}

inline void write_divisor(std::ostream& out, const Divisor& d) {
  out << d.size() << '\n';
  for (std::size_t i = 0; i < d.size(); ++i) out << (i ? " " : "") << d[i];
  out << '\n';
}

// One egg per line, vertex ids separated by spaces.
inline Scramble read_scramble(std::istream& in, const Multigraph& host) {
  const auto lines = detail::tokenize(in);
  if (lines.empty()) throw ParseError("scramble has no eggs", 1, 1);
  std::vector<VertexSet> eggs;
  for (const auto& l : lines) {
    VertexSet egg(host.vertex_count());
    for (const auto& t : l) {
      const auto v = detail::natural(t, "vertex");
      if (v >= host.vertex_count())
        throw ParseError("vertex out of range", t.line, t.column);
      egg.insert(v);
    }
    if (!is_connected_subset(host, egg))
      throw ParseError("egg is not connected", l.front().line, 0);
    eggs.push_back(std::move(egg));
  }
  return Scramble(host, std::move(eggs));
}

inline void write_scramble(std::ostream& out, const Scramble& s) {
  for (const auto& e : s.eggs()) {
    bool first = true;
    e.for_each([&](Vertex v) {
      out << (first ? "" : " ") << v;
      first = false;
    });
    out << '\n';
  }
}

}  // namespace chipfire::io
