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

#include <gtest/gtest.h>

#include <sstream>

#include "chipfire.hpp"
#include "test_util.hpp"

namespace cf = chipfire;
using cf::Multigraph;

namespace {

void expect_parse_error(const std::string& text, std::size_t line, std::size_t column) {
  try {
    cf::io::parse_mel(text);
    FAIL() << "accepted: " << text;
  } catch (const cf::ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

TEST(Mel, ReadsCommentsAndDefaults) {
  auto g = cf::io::parse_mel("# a triangle with a doubled side\n3 3\n0 1\n1 2 2\n\n# tail\n2 0 1\n");
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_EQ(g.multiplicity(1, 2), 2u);
}

TEST(Mel, RepeatedLinesAccumulate) {
  auto g = cf::io::parse_mel("2 2\n0 1\n1 0 3\n");
  EXPECT_EQ(g.multiplicity(0, 1), 4u);
  EXPECT_EQ(cf::io::to_mel(g), "2 1\n0 1 4\n");
}

TEST(Mel, RoundTrip) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto g = oracle::random_multigraph(1 + s % 9, 0.4, s);
    EXPECT_EQ(cf::io::parse_mel(cf::io::to_mel(g)), g);
  }
  auto big = cf::gen::grid({3, 3, 2});
  EXPECT_EQ(cf::io::parse_mel(cf::io::to_mel(big)), big);
}

TEST(Mel, ErrorsCarryPosition) {
  expect_parse_error("", 1, 1);
  expect_parse_error("# only a comment\n", 1, 1);
  expect_parse_error("3\n", 1, 0);
  expect_parse_error("3 1 7\n0 1\n", 1, 5);
  expect_parse_error("x 1\n0 1\n", 1, 1);
  expect_parse_error("0 0\n", 1, 1);
  expect_parse_error("3 2\n0 1\n", 2, 0);
  expect_parse_error("3 1\n0 1\n1 2\n", 3, 0);
  expect_parse_error("3 1\n0 3\n", 2, 3);
  expect_parse_error("3 1\n1 1\n", 2, 3);
  expect_parse_error("3 1\n0 1 0\n", 2, 5);
  expect_parse_error("3 1\n0 -1\n", 2, 3);
  expect_parse_error("3 1\n0 1 1 1\n", 2, 7);
}

TEST(DivisorText, ReadAndWrite) {
  std::istringstream in("4\n1 -2\n0 3\n");
  auto d = cf::io::read_divisor(in, 4);
  EXPECT_EQ(d, cf::Divisor(std::vector<std::int64_t>{1, -2, 0, 3}));
  std::ostringstream out;
  cf::io::write_divisor(out, d);
  EXPECT_EQ(out.str(), "4\n1 -2 0 3\n");
  std::istringstream wrong("3\n0 0 0\n");
  EXPECT_THROW(cf::io::read_divisor(wrong, 4), cf::ParseError);
  std::istringstream short_("4\n0 0 0\n");
  EXPECT_THROW(cf::io::read_divisor(short_, 4), cf::ParseError);
}

TEST(ScrambleText, ReadAndWrite) {
  auto g = cf::fixtures::cube();
  std::istringstream in("0 4\n# comment\n1 5\n2 6\n3 7\n");
  auto s = cf::io::read_scramble(in, g);
  EXPECT_EQ(s.eggs(), cf::fixtures::cube_scramble().eggs());
  std::ostringstream out;
  cf::io::write_scramble(out, s);
  std::istringstream back(out.str());
  EXPECT_EQ(cf::io::read_scramble(back, g).eggs(), s.eggs());
  std::istringstream bad("0 6\n");
  EXPECT_THROW(cf::io::read_scramble(bad, g), cf::ParseError);
  std::istringstream range("0 8\n");
  EXPECT_THROW(cf::io::read_scramble(range, g), cf::ParseError);
}

TEST(Fixtures, AllChecksPass) {
  for (const auto& c : cf::fixtures::run_checks())
    EXPECT_TRUE(c.pass) << c.name << ": expected " << c.expected << ", got " << c.actual;
}

TEST(Fixtures, GraphsRoundTrip) {
  for (const auto& ng : cf::fixtures::all_graphs())
    EXPECT_EQ(cf::io::parse_mel(cf::io::to_mel(ng.graph)), ng.graph) << ng.name;
}

TEST(Fixtures, Lift) {
  auto g = cf::gen::path(3);
  EXPECT_EQ(cf::fixtures::lift(g, 0, 1, 2), Multigraph::from_edge_list(3, {{0, 2, 1}}));
  EXPECT_THROW(cf::fixtures::lift(g, 0, 2, 1), cf::ValidationError);
}

}  // namespace
