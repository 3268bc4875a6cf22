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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chipfire.hpp"
#include "test_util.hpp"

namespace cf = chipfire;
using cf::Multigraph;
using cf::Vertex;

namespace {

// Every quantity checked here is an integer; comparisons are exact.
constexpr std::int64_t kTolerance = 0;
constexpr double kCubeSeconds = 5.0;
constexpr double kClassicalSeconds = 60.0;
constexpr double kAlphaSeconds = 600.0;
constexpr std::uint64_t kSeed = 20261017;

class Criterion {
 public:
  explicit Criterion(double budget = 0.0) : budget_(budget) {}

  template <typename A, typename B>
  void equal(const std::string& what, const A& want, const B& got) {
    ++checks_;
    const auto diff = static_cast<std::int64_t>(got) - static_cast<std::int64_t>(want);
    if (diff > kTolerance || -diff > kTolerance) fail(what, std::to_string(want), std::to_string(got));
  }
  template <typename A, typename B>
  void at_most(const std::string& what, const A& lo, const B& hi) {
    ++checks_;
    if (static_cast<std::int64_t>(lo) > static_cast<std::int64_t>(hi) + kTolerance)
      fail(what, "<= " + std::to_string(hi), std::to_string(lo));
  }
  void truth(const std::string& what, bool ok) {
    ++checks_;
    if (!ok) fail(what, "true", "false");
  }

  double budget() const { return budget_; }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }
  void note(std::string s) { failures_.push_back(std::move(s)); }

 private:
  void fail(const std::string& what, const std::string& want, const std::string& got) {
    if (failures_.size() < 8) failures_.push_back(what + ": expected " + want + ", got " + got);
    else if (failures_.size() == 8) failures_.push_back("...");
  }
  double budget_;
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

std::int64_t gon(const Multigraph& g, cf::SearchPruning p = cf::SearchPruning::kReduced) {
  cf::GonalityOptions o;
  o.pruning = p;
  return cf::gonality(g, o).value;
}

Multigraph prod(const Multigraph& a, const Multigraph& b) { return cf::cartesian_product(a, b); }

std::size_t n_minus_alpha(const Multigraph& g) { return g.vertex_count() - oracle::alpha(g); }

void cube(Criterion& c) {
  const auto q3 = cf::gen::hypercube(3);
  c.truth("fixture cube is Q3", oracle::isomorphic(q3, cf::fixtures::cube()));
  c.equal("gon(Q3)", 4, gon(q3));
  c.equal("order of spoke scramble", 4, cf::scramble_order(cf::fixtures::cube_scramble()).order);
  const auto r = cf::sn_bounds(q3).report;
  c.equal("sn lower", 4, r.lower);
  c.equal("sn upper", 4, r.upper);
}

void classical(Criterion& c) {
  for (std::size_t n = 2; n <= 6; ++n)
    c.equal("gon(K" + std::to_string(n) + ")", n - 1, gon(cf::gen::complete(n)));
  c.equal("gon(K2,3)", 2, gon(cf::gen::complete_bipartite(2, 3)));
  c.equal("gon(K3,3)", 3, gon(cf::gen::complete_bipartite(3, 3)));
  for (std::size_t m = 3; m <= 8; ++m)
    c.equal("gon(C" + std::to_string(m) + ")", 2, gon(cf::gen::cycle(m)));
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < 10; ++i) {
    const std::size_t n = 2 + rng() % 9;
    c.equal("gon(random tree on " + std::to_string(n) + ")", 1, gon(cf::gen::random_tree(n, rng())));
  }
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t n = m; n <= 4; ++n)
      c.equal("gon(grid " + std::to_string(m) + "x" + std::to_string(n) + ")", m,
              gon(cf::gen::grid({m, n})));
}

void wedge_trio(Criterion& c) {
  const Multigraph trio[] = {cf::fixtures::slashed_diamond(), cf::fixtures::diamond_wedge_low(),
                             cf::fixtures::diamond_wedge_high()};
  const std::uint64_t want[] = {2, 2, 3};
  cf::SnBoundsOptions o;
  o.brute_vertex_limit = 8;
  for (int i = 0; i < 3; ++i) {
    const auto tag = "graph " + std::to_string(i + 1);
    c.equal("gon " + tag, want[i], gon(trio[i]));
    const auto r = cf::sn_bounds(trio[i], o).report;
    c.equal("sn lower " + tag, want[i], r.lower);
    c.equal("sn upper " + tag, want[i], r.upper);
  }
  c.equal("drawn scramble order", 3,
          cf::scramble_order(cf::fixtures::diamond_wedge_high_scramble()).order);
}

void lift_pair(Criterion& cr) {
  using namespace cf::fixtures::lift_label;
  const auto h = cf::fixtures::lift_pair_h();
  const auto g = cf::fixtures::lift_pair_g();
  cr.truth("G arises from H by two lifts",
          cf::fixtures::lift(cf::fixtures::lift(h, a, c, d), a, d, e) == g);
  cr.equal("order of {a,e},{b,c},{d,f}", 3,
          cf::scramble_order(cf::fixtures::lift_pair_g_scramble()).order);
  cr.truth("(a)+(b) has positive rank after one c-d edge is dropped",
          cf::has_positive_rank(cf::fixtures::lift_pair_h_minus(), cf::fixtures::lift_pair_divisor()));
  cf::SnBoundsOptions o;
  o.brute_vertex_limit = 8;
  const auto rh = cf::sn_bounds(h, o).report;
  cr.equal("sn(H) lower", 2, rh.lower);
  cr.equal("sn(H) upper", 2, rh.upper);
  cr.truth("sn(H) closed by the exhaustive oracle",
          rh.lower_source.find("exhaustive") != std::string::npos);
  cr.equal("brute-force sn(H)", 2, cf::brute_force_sn(h).value);
  const auto rg = cf::sn_bounds(g, o).report;
  cr.equal("sn(G)", 3, rg.lower);
  cr.truth("sn(G) > sn(H)", rg.lower > rh.upper);
}

// Every vertex other than q burns when K_n carries d chips off q, d <= n-2.
bool burns_all(const Multigraph& k, const cf::Divisor& d, Vertex q) {
  return cf::dhar_burn(k, d, q).burned.size() == k.vertex_count();
}

void dhar_on_complete(Criterion& c) {
  for (std::size_t n = 4; n <= 5; ++n) {
    const auto k = cf::gen::complete(n);
    std::size_t tried = 0;
    for (std::int64_t deg = 0; deg <= static_cast<std::int64_t>(n) - 2; ++deg)
      for (const auto& d : oracle::effective_divisors(n, deg))
        for (Vertex q = 0; q < n; ++q)
          if (d[q] == 0) {
            ++tried;
            if (!burns_all(k, d, q)) c.note("K" + std::to_string(n) + " " + d.to_string());
          }
    c.truth("K" + std::to_string(n) + " exhaustive (" + std::to_string(tried) + " cases)", tried > 0);
  }
  std::mt19937_64 rng(kSeed + 5);
  for (std::size_t n = 6; n <= 7; ++n) {
    const auto k = cf::gen::complete(n);
    for (int i = 0; i < 500; ++i) {
      const auto q = static_cast<Vertex>(rng() % n);
      const auto deg = rng() % (n - 1);
      cf::Divisor d(n);
      for (std::uint64_t j = 0; j < deg; ++j) {
        Vertex v = static_cast<Vertex>(rng() % (n - 1));
        if (v >= q) ++v;
        d = d + cf::Divisor::point(n, v);
      }
      c.truth("K" + std::to_string(n) + " sample " + d.to_string(), burns_all(k, d, q));
    }
  }
}

void dense_graphs(Criterion& c) {
  std::mt19937_64 rng(kSeed + 6);
  int found = 0;
  while (found < 100) {
    const std::size_t n = 6 + rng() % 5;
    const auto g = cf::gen::random_graph(n, 0.85, rng());
    if (!cf::is_connected(g) || cf::min_degree(g) < n / 2 + 1) continue;
    ++found;
    const auto want = n_minus_alpha(g);
    const auto tag = "graph #" + std::to_string(found) + " (n=" + std::to_string(n) + ")";
    c.equal("edge-scramble order " + tag, want, cf::scramble_order(cf::edge_scramble(g)).order);
    c.equal("gon " + tag, want, gon(g));
  }
}

void sharpness(Criterion& c) {
  const auto r = cf::fixtures::rook_sharpness();
  c.truth("rook fixture is K3xK2", r == prod(cf::gen::complete(3), cf::gen::complete(2)));
  c.equal("gon(K3xK2)", 3, gon(r));
  c.equal("n - alpha(K3xK2)", 4, n_minus_alpha(r));
  const auto o = cf::fixtures::odd_sharpness();
  c.equal("odd graph n", 5, o.vertex_count());
  c.equal("odd graph min degree", 2, cf::min_degree(o));
  c.equal("gon(odd graph)", 2, gon(o));
  c.equal("n - alpha(odd graph)", 3, n_minus_alpha(o));
}

void alpha_round_trip(Criterion& c) {
  std::vector<Multigraph> pool;
  for (std::size_t m = 2; m <= 4; ++m)
    for (auto& g : oracle::up_to_isomorphism(oracle::connected_graphs(m, m * (m - 1) / 2)))
      pool.push_back(std::move(g));
  for (std::uint64_t i = 0; i < 10; ++i) pool.push_back(oracle::random_connected(5, 0.5, kSeed + i));
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const auto& g = pool[i];
    const auto red = cf::reduce_alpha(g);
    const auto m = g.vertex_count();
    const auto tag = "graph #" + std::to_string(i) + " (m=" + std::to_string(m) + ")";
    c.equal("alpha " + tag, oracle::alpha(g), red.alpha);
    c.equal("2m - gon(cone) " + tag, oracle::alpha(g), 2 * m - red.cone_value);
  }
}

const std::vector<std::pair<std::string, Multigraph>>& factor_pool() {
  static const std::vector<std::pair<std::string, Multigraph>> pool = {
      {"P2", cf::gen::path(2)},     {"P3", cf::gen::path(3)},         {"C3", cf::gen::cycle(3)},
      {"C4", cf::gen::cycle(4)},    {"K3", cf::gen::complete(3)},     {"K4", cf::gen::complete(4)},
      {"star(3)", cf::gen::star(3)}};
  return pool;
}

void formula_soundness(Criterion& c) {
  for (const auto& [gname, g] : factor_pool())
    for (const auto& [hname, h] : factor_pool()) {
      if (g.vertex_count() * h.vertex_count() > 12) continue;
      const auto tag = gname + "x" + hname;
      const auto exact = gon(prod(g, h));
      try {
        c.at_most("copy bound " + tag, cf::canonical_copy_lower(g, h), exact);
      } catch (const cf::HypothesisError&) {
      }
      try {
        c.at_most("two-connected bound " + tag, cf::two_connected_lower(g, h), exact);
      } catch (const cf::HypothesisError&) {
      }
      for (std::size_t k = 1; k <= cf::vertex_connectivity(g) && 2 * k <= g.vertex_count() + 1; ++k) {
        const auto bound = cf::product_scramble_lower(g, h, k);
        const auto kt = tag + " k=" + std::to_string(k);
        c.at_most("scramble bound " + kt, bound, exact);
        c.at_most("product scramble " + kt, bound,
                  cf::scramble_order(cf::product_scramble(g, h, k)).order);
      }
    }
}

void desk_certificates(Criterion& c) {
  const auto c4c5 = cf::certify_product(cf::gen::cycle(4), cf::gen::cycle(5));
  c.truth("C4xC5 certified", c4c5.value.has_value());
  c.equal("certified gon(C4xC5)", 8, c4c5.value.value_or(0));
  c.equal("exhaustive gon(C4xC5)", 8, gon(prod(cf::gen::cycle(4), cf::gen::cycle(5))));
  for (std::size_t n = 3; n <= 4; ++n) {
    const auto tag = "C2xK" + std::to_string(n);
    const auto cert = cf::certify_product(cf::gen::cycle(2), cf::gen::complete(n));
    c.truth(tag + " uses the cycle-times-complete branch",
            cert.applied && cert.applied->id == "cycle-times-complete");
    c.equal("certified gon " + tag, 2 * n - 2, cert.value.value_or(0));
    c.equal("exhaustive gon " + tag, 2 * n - 2, gon(prod(cf::gen::cycle(2), cf::gen::complete(n))));
  }
  c.equal("product upper C4xK3", 6, cf::product_gon_upper(cf::gen::cycle(4), cf::gen::complete(3)));
  c.equal("exhaustive gon(C4xK3)", 6, gon(prod(cf::gen::cycle(4), cf::gen::complete(3))));

  auto pool = factor_pool();
  pool.emplace_back("C2", cf::gen::cycle(2));
  for (const auto& named : cf::fixtures::all_graphs())
    if (cf::is_connected(named.graph) && named.graph.vertex_count() <= 6)
      pool.emplace_back(named.name, named.graph);
  std::size_t certified = 0;
  for (const auto& [gname, g] : pool)
    for (const auto& [hname, h] : pool) {
      if (g.vertex_count() < 2 || h.vertex_count() < 2) continue;
      if (g.vertex_count() * h.vertex_count() > 12) continue;
      const auto tag = gname + "x" + hname;
      const auto cert = cf::certify_product(g, h);
      const auto exact = static_cast<std::uint64_t>(gon(prod(g, h)));
      c.at_most("lower " + tag, cert.bounds.lower, exact);
      c.at_most("upper " + tag, exact, cert.bounds.upper);
      if (cert.value) {
        ++certified;
        c.equal("certified " + tag, exact, *cert.value);
      }
    }
  c.truth("some corpus product certified", certified > 0);
}

void check_applied(Criterion& c, const std::string& tag, const cf::Certificate& cert,
                   const std::string& id, std::uint64_t value) {
  c.truth(tag + " certified", cert.applied.has_value());
  if (!cert.applied) return;
  c.truth(tag + " via " + id + " (got " + cert.applied->id + ")", cert.applied->id == id);
  for (const auto& hyp : cert.applied->checklist)
    c.truth(tag + " hypothesis " + hyp.name + " = " + hyp.computed, hyp.pass);
  c.equal(tag + " value", value, cert.value.value_or(0));
  c.at_most(tag + " lower bound", cert.bounds.lower, value);
  c.at_most(tag + " upper bound", value, cert.bounds.upper);
}

void large_reports(Criterion& c) {
  const auto k3k2 = prod(cf::gen::complete(3), cf::gen::complete(2));
  check_applied(c, "K4xK3xK2", cf::certify_product(k3k2, cf::gen::complete(4)),
                "equal-connectivity-and-gonality", 12);
  const auto c3c3 = prod(cf::gen::cycle(3), cf::gen::cycle(3));
  check_applied(c, "C3xC3xC6", cf::certify_product(c3c3, cf::gen::cycle(6)),
                "k-connected-gonality-equals-edge-connectivity", 2 * 3 * 3);
}

void oracle_equivalences(Criterion& c) {
  std::vector<Multigraph> pool;
  for (std::size_t n = 1; n <= 5; ++n)
    for (auto& g : oracle::up_to_isomorphism(oracle::connected_graphs(n, 8))) {
      // Also each graph with one edge doubled, keeping at most 8 edges.
      if (g.edge_count() < 8)
        for (const auto& e : g.edges()) {
          auto es = g.edges();
          for (auto& f : es)
            if (f.u == e.u && f.v == e.v) ++f.count;
          pool.push_back(Multigraph::from_edge_list(n, es));
        }
      pool.push_back(std::move(g));
    }
  std::size_t closed = 0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const auto& g = pool[i];
    const auto tag = "graph #" + std::to_string(i);
    const auto reduced = gon(g, cf::SearchPruning::kReduced);
    c.equal("pruned vs unpruned gon " + tag, gon(g, cf::SearchPruning::kNone), reduced);
    c.equal("valence vs unpruned gon " + tag, gon(g, cf::SearchPruning::kNone),
            gon(g, cf::SearchPruning::kValence));

    if (g.vertex_count() <= 5) {
      for (std::int64_t d = 0; d <= 3; ++d) {
        const auto divs = oracle::effective_divisors(g.vertex_count(), d);
        for (const auto& a : divs) {
          const auto orbit = oracle::effective_orbit(g, a);
          for (const auto& b : divs)
            c.truth(tag + ": equivalence of " + a.to_string() + " and " + b.to_string(),
                    cf::equivalent(g, a, b) == (orbit.count(b.chips()) > 0));
        }
      }
    }

    cf::SnBoundsOptions o;
    const auto r = cf::sn_bounds(g, o).report;
    if (r.exact()) {
      ++closed;
      c.equal("brute sn vs sandwich " + tag, r.lower, cf::brute_force_sn(g).value);
    }
  }
  c.truth("sandwich closed on some graphs (" + std::to_string(closed) + "/" +
              std::to_string(pool.size()) + ")",
          closed > 0);
}

struct Entry {
  int id;
  const char* name;
  double budget;
  std::function<void(Criterion&)> run;
};

}  // namespace

int main() {
  const std::vector<Entry> entries = {
      {1, "cube: gonality, drawn scramble and sn all equal 4", kCubeSeconds, cube},
      {2, "classical gonalities", kClassicalSeconds, classical},
      {3, "wedge trio gonality and sn (2, 2, 3)", 0, wedge_trio},
      {4, "lift pair: sn drops from 3 to 2 under lifting", 0, lift_pair},
      {5, "one Dhar pass burns K_n below degree n-1", 0, dhar_on_complete},
      {6, "dense graphs: edge-scramble order = gon = n - alpha", 0, dense_graphs},
      {7, "sharpness fixtures", 0, sharpness},
      {8, "independence number recovered through the cone", kAlphaSeconds, alpha_round_trip},
      {9, "product lower bounds below exhaustive gonality", 0, formula_soundness},
      {10, "desk-scale product certificates", 0, desk_certificates},
      {11, "large product certificates with checked hypotheses", 0, large_reports},
      {12, "pruning, equivalence and sn oracles agree", 0, oracle_equivalences},
  };
  int failed = 0;
  for (const auto& e : entries) {
    Criterion c(e.budget);
    const auto start = std::chrono::steady_clock::now();
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.note(std::string("exception: ") + ex.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget() > 0 && secs > c.budget())
      c.note("took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget()) + " s");
    const bool ok = c.failures().empty();
    if (!ok) ++failed;
    std::printf("[%s] %2d %s (%zu checks, %.2f s)\n", ok ? "PASS" : "FAIL", e.id, e.name,
                c.checks(), secs);
    for (const auto& f : c.failures()) std::printf("       %s\n", f.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(entries.size()) - failed,
              entries.size());
  return failed == 0 ? 0 : 1;
}
