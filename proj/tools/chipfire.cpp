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

// chipfire: command-line front end. Graphs are read and written in MEL v1;
// "-" reads standard input.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chipfire.hpp"

namespace cf = chipfire;

namespace {

// key=value lines in machine mode, free text otherwise.
class Report {
 public:
  explicit Report(bool machine) : machine_(machine) {}
  bool machine() const { return machine_; }

  template <class T>
  void kv(const std::string& key, const T& value, const std::string& label = "") {
    std::ostringstream v;
    v << value;
    if (machine_)
      std::cout << key << '=' << v.str() << '\n';
    else
      std::cout << (label.empty() ? key : label) << ": " << v.str() << '\n';
  }
  void text(const std::string& line) {
    if (!machine_) std::cout << line << '\n';
  }

 private:
  bool machine_;
};

std::string join(const std::vector<std::int64_t>& xs, char sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

class Inputs {
 public:
  std::istream& open(const std::string& path) {
    if (path == "-") {
      if (stdin_used_) throw cf::ValidationError("standard input can be read only once");
      stdin_used_ = true;
      return std::cin;
    }
    files_.emplace_back(path);
    if (!files_.back()) throw cf::ValidationError("cannot open " + path);
    return files_.back();
  }
  cf::Multigraph graph(const std::string& path) {
    try {
      return cf::io::read_mel(open(path));
    } catch (const cf::ParseError& e) {
      throw cf::ValidationError(path + ": " + e.what());
    }
  }

 private:
  bool stdin_used_ = false;
  std::vector<std::ifstream> files_;
};

std::size_t count_arg(const std::vector<std::string>& p, std::size_t i,
                      const std::string& family) {
  if (i >= p.size()) throw cf::ValidationError(family + ": missing size argument");
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(p[i], &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != p[i].size() || v < 0)
    throw cf::ValidationError(family + ": '" + p[i] + "' is not a count");
  return static_cast<std::size_t>(v);
}

cf::Multigraph generate(const std::string& family, const std::vector<std::string>& p,
                        std::optional<std::uint64_t> seed) {
  auto arity = [&](std::size_t k) {
    if (p.size() != k)
      throw cf::ValidationError(family + " takes " + std::to_string(k) + " argument(s)");
  };
  auto counts = [&]() {
    if (p.empty()) throw cf::ValidationError(family + " needs at least one size");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < p.size(); ++i) out.push_back(count_arg(p, i, family));
    return out;
  };
  auto need_seed = [&]() {
    if (!seed) throw cf::ValidationError(family + " is random and needs --seed");
    return *seed;
  };
  if (family == "path") { arity(1); return cf::gen::path(count_arg(p, 0, family)); }
  if (family == "cycle") { arity(1); return cf::gen::cycle(count_arg(p, 0, family)); }
  if (family == "complete") { arity(1); return cf::gen::complete(count_arg(p, 0, family)); }
  if (family == "complete-bipartite") {
    arity(2);
    return cf::gen::complete_bipartite(count_arg(p, 0, family), count_arg(p, 1, family));
  }
  if (family == "complete-multipartite") return cf::gen::complete_multipartite(counts());
  if (family == "hypercube") { arity(1); return cf::gen::hypercube(count_arg(p, 0, family)); }
  if (family == "grid") return cf::gen::grid(counts());
  if (family == "star") { arity(1); return cf::gen::star(count_arg(p, 0, family)); }
  if (family == "random-tree") {
    arity(1);
    return cf::gen::random_tree(count_arg(p, 0, family), need_seed());
  }
  if (family == "random-graph") {
    arity(2);
    double prob = 0;
    std::size_t pos = 0;
    try {
      prob = std::stod(p[1], &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != p[1].size() || !(prob >= 0 && prob <= 1))
      throw cf::ValidationError("random-graph: edge probability must be in [0, 1]");
    return cf::gen::random_graph(count_arg(p, 0, family), prob, need_seed());
  }
  throw cf::ValidationError("unknown family '" + family + "'");
}

void print_order(Report& r, const cf::ScrambleOrder& o) {
  r.kv("order", o.order);
  r.kv("hitting", o.hitting, "hitting number");
  r.kv("hitting_set", o.hitting_set.to_string(), "hitting set");
  r.kv("egg_cut", o.egg_cut.to_string(), "egg-cut number");
  if (o.egg_cut.witness) r.kv("egg_cut_side", o.egg_cut.witness->side.to_string(), "egg-cut side");
}

void print_bounds(Report& r, const std::string& prefix, const cf::BoundReport& b) {
  r.kv(prefix + "lower", b.lower, "lower bound");
  r.kv(prefix + "lower_source", b.lower_source, "  from");
  r.kv(prefix + "upper", b.upper, "upper bound");
  r.kv(prefix + "upper_source", b.upper_source, "  from");
  r.kv(prefix + "exact", b.exact() ? "yes" : "no", "exact");
}

// Eggs as scramble text; order summary as comment lines so the output still
// parses as a scramble.
void emit_scramble(const cf::Scramble& s, bool with_order) {
  if (with_order) {
    const auto o = cf::scramble_order(s);
    std::cout << "# eggs " << s.eggs().size() << "\n# order " << o.order << "\n# hitting "
              << o.hitting << "\n# egg-cut " << o.egg_cut.to_string() << '\n';
  }
  cf::io::write_scramble(std::cout, s);
}

cf::SearchPruning parse_pruning(const std::string& s) {
  if (s == "none") return cf::SearchPruning::kNone;
  if (s == "valence") return cf::SearchPruning::kValence;
  return cf::SearchPruning::kReduced;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chipfire: divisors, gonality and scrambles on multigraphs"};
  app.require_subcommand(1);
  bool machine = false;
  unsigned threads = 1;
  app.add_flag("--machine", machine, "key=value output");
  app.add_option("--threads", threads, "worker threads for gonality search")
      ->check(CLI::Range(1u, 256u));

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph family as MEL");
  std::string family;
  std::vector<std::string> gen_args;
  std::optional<std::uint64_t> seed;
  gen->add_option("family", family,
                  "path | cycle | complete | complete-bipartite | complete-multipartite | "
                  "hypercube | grid | star | random-tree | random-graph")
      ->required();
  gen->add_option("args", gen_args, "sizes (and edge probability for random-graph)");
  gen->add_option("--seed", seed, "seed for random families");

  std::string graph_path, other_path, aux_path;

  auto* info = app.add_subcommand("info", "basic invariants");
  info->add_option("graph", graph_path)->required();

  auto* gon = app.add_subcommand("gonality", "exact gonality with a witness divisor");
  gon->add_option("graph", graph_path)->required();
  std::optional<std::int64_t> gon_lower, gon_upper;
  std::string pruning = "reduced";
  gon->add_option("--lower", gon_lower, "start the search at this degree");
  gon->add_option("--upper", gon_upper, "give up above this degree");
  gon->add_option("--pruning", pruning)
      ->check(CLI::IsMember({"none", "valence", "reduced"}));

  auto* rank = app.add_subcommand("rank", "rank of a divisor, truncated at --cap");
  rank->add_option("graph", graph_path)->required();
  rank->add_option("divisor", aux_path)->required();
  std::int64_t cap = 1;
  rank->add_option("--cap", cap)->check(CLI::NonNegativeNumber);

  auto* reduce = app.add_subcommand("reduce", "q-reduced form of a divisor");
  reduce->add_option("graph", graph_path)->required();
  reduce->add_option("divisor", aux_path)->required();
  std::size_t q = 0;
  reduce->add_option("--q", q, "base vertex")->required();

  auto* sorder = app.add_subcommand("scramble-order", "order of a scramble");
  sorder->add_option("graph", graph_path)->required();
  sorder->add_option("scramble", aux_path)->required();

  auto* snb = app.add_subcommand("sn-bounds", "bounds on the scramble number");
  snb->add_option("graph", graph_path)->required();
  std::optional<std::size_t> brute;
  std::size_t brute_vertices = 8;
  std::size_t gon_budget = 12;
  snb->add_option("--brute", brute,
                  "run the exhaustive search with this egg-pool cap (0 = no cap)");
  snb->add_option("--brute-vertices", brute_vertices,
                  "largest piece handed to the exhaustive search");
  snb->add_option("--gon-budget", gon_budget, "largest piece searched for gonality");
  std::vector<std::string> user_scrambles;
  snb->add_option("--scramble", user_scrambles, "extra scramble file(s)");

  auto* escr = app.add_subcommand("edge-scramble", "the edge scramble as scramble text");
  escr->add_option("graph", graph_path)->required();
  bool with_order = false;
  escr->add_flag("--order", with_order, "prefix the order as comments");

  auto* pscr = app.add_subcommand("product-scramble",
                                  "scramble of G-copies minus k-1 vertices on G x H");
  pscr->add_option("G", graph_path)->required();
  pscr->add_option("H", other_path)->required();
  std::uint64_t k = 1;
  pscr->add_option("--k", k)->required();
  pscr->add_flag("--order", with_order, "prefix the order as comments");

  auto* prod = app.add_subcommand("product", "Cartesian product G x H as MEL");
  prod->add_option("G", graph_path)->required();
  prod->add_option("H", other_path)->required();

  auto* conec = app.add_subcommand("cone", "add l vertices joined to everything");
  conec->add_option("graph", graph_path)->required();
  std::size_t cone_l = 0;
  conec->add_option("l", cone_l)->required();

  auto* cert = app.add_subcommand("certify", "exact gonality of G x H when a product statement applies");
  cert->add_option("G", graph_path)->required();
  cert->add_option("H", other_path)->required();
  std::optional<std::uint64_t> gon_g, gon_h;
  cert->add_option("--gon-G", gon_g, "known gonality of G");
  cert->add_option("--gon-H", gon_h, "known gonality of H");
  cert->add_option("--budget", gon_budget, "largest factor searched for gonality");

  auto* ralpha = app.add_subcommand("reduce-alpha", "independence number through the cone");
  ralpha->add_option("graph", graph_path)->required();
  std::string via = "gonality";
  ralpha->add_option("--via", via)->check(CLI::IsMember({"gonality", "sandwich"}));
  std::string cone_out;
  ralpha->add_option("--cone-out", cone_out, "also write the cone graph here");

  auto* fix = app.add_subcommand("fixtures", "hand-built graphs and their checks");
  bool check = false;
  std::string out_dir;
  fix->add_flag("--check", check, "run the documented checks");
  fix->add_option("--out", out_dir, "write graphs, scrambles and divisors here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Report r(machine);
  Inputs in;
  try {
    if (gen->parsed()) {
      cf::io::write_mel(std::cout, generate(family, gen_args, seed));
    } else if (info->parsed()) {
      const auto g = in.graph(graph_path);
      r.kv("vertices", g.vertex_count());
      r.kv("edges", g.edge_count());
      r.kv("simple", g.is_simple() ? "yes" : "no");
      r.kv("components", cf::components(g).size());
      r.kv("connected", cf::is_connected(g) ? "yes" : "no");
      r.kv("min_degree", cf::min_degree(g), "min degree");
      r.kv("max_degree", cf::max_degree(g), "max degree");
      r.kv("edge_connectivity", cf::edge_connectivity(g), "edge connectivity");
      r.kv("vertex_connectivity", cf::vertex_connectivity(g), "vertex connectivity");
      r.kv("bridges", cf::bridges(g).size());
      r.kv("cycle_rank", cf::cycle_rank(g), "cycle rank");
      r.kv("independence_number", cf::independence_number(g), "independence number");
    } else if (gon->parsed()) {
      const auto g = in.graph(graph_path);
      cf::GonalityOptions opt;
      opt.lower = gon_lower;
      opt.upper = gon_upper;
      opt.pruning = parse_pruning(pruning);
      opt.threads = threads;
      const auto res = cf::gonality(g, opt);
      if (machine) {
        r.kv("gonality", res.value);
        r.kv("witness", join(res.witness.chips(), ','));
        r.kv("candidates", res.candidates);
      } else {
        std::cout << res.value << "\nwitness " << res.witness.to_string() << '\n';
      }
    } else if (rank->parsed()) {
      const auto g = in.graph(graph_path);
      const auto d = cf::io::read_divisor(in.open(aux_path), g.vertex_count());
      r.kv("rank", cf::rank(g, d, cap));
      r.kv("cap", cap);
    } else if (reduce->parsed()) {
      const auto g = in.graph(graph_path);
      const auto d = cf::io::read_divisor(in.open(aux_path), g.vertex_count());
      const auto red = cf::q_reduce_with_script(g, d, q);
      if (machine) {
        r.kv("reduced", join(red.reduced.chips(), ','));
        r.kv("firing_steps", red.script.size());
      } else {
        cf::io::write_divisor(std::cout, red.reduced);
      }
    } else if (sorder->parsed()) {
      const auto g = in.graph(graph_path);
      const auto s = cf::io::read_scramble(in.open(aux_path), g);
      r.kv("eggs", s.eggs().size());
      print_order(r, cf::scramble_order(s));
    } else if (snb->parsed()) {
      const auto g = in.graph(graph_path);
      cf::SnBoundsOptions opt;
      opt.gonality_vertex_budget = gon_budget;
      opt.threads = threads;
      if (brute) {
        opt.brute_vertex_limit = brute_vertices;
        opt.brute_max_eggs = *brute;
      }
      for (const auto& path : user_scrambles)
        opt.scrambles.push_back(cf::io::read_scramble(in.open(path), g));
      const auto res = cf::sn_bounds(g, opt);
      print_bounds(r, "sn_", res.report);
      r.kv("pieces", res.pieces.size());
      for (std::size_t i = 0; i < res.pieces.size(); ++i) {
        const auto& p = res.pieces[i];
        const auto key = "piece" + std::to_string(i) + "_";
        r.kv(key + "vertices", p.vertices.to_string(), "piece " + std::to_string(i));
        r.kv(key + "smoothed_vertices", p.smoothed.vertex_count(), "  smoothed vertices");
        r.kv(key + "bounds", std::to_string(p.bounds.lower) + ".." + std::to_string(p.bounds.upper),
             "  sn");
      }
    } else if (escr->parsed()) {
      emit_scramble(cf::edge_scramble(in.graph(graph_path)), with_order);
    } else if (pscr->parsed()) {
      const auto g = in.graph(graph_path);
      const auto h = in.graph(other_path);
      emit_scramble(cf::product_scramble(g, h, k), with_order);
    } else if (prod->parsed()) {
      const auto g = in.graph(graph_path);
      const auto h = in.graph(other_path);
      cf::io::write_mel(std::cout, cf::cartesian_product(g, h));
    } else if (conec->parsed()) {
      cf::io::write_mel(std::cout, cf::cone(in.graph(graph_path), cone_l));
    } else if (cert->parsed()) {
      const auto g = in.graph(graph_path);
      const auto h = in.graph(other_path);
      cf::CertifyOptions opt;
      opt.gon_g = gon_g;
      opt.gon_h = gon_h;
      opt.gonality_vertex_budget = gon_budget;
      opt.threads = threads;
      const auto c = cf::certify_product(g, h, opt);
      r.kv("gon_G", c.g.gon, "gon(G)");
      r.kv("gon_H", c.h.gon, "gon(H)");
      if (c.applied) {
        r.kv("statement", c.applied->id);
        r.kv("orientation", c.applied->swapped ? "H,G" : "G,H");
        for (std::size_t i = 0; i < c.applied->checklist.size(); ++i) {
          const auto& h = c.applied->checklist[i];
          if (machine) {
            r.kv("hypothesis" + std::to_string(i), h.name + " [" + h.computed + "] " +
                                                       (h.pass ? "pass" : "fail"));
          } else {
            std::cout << "  [" << (h.pass ? "pass" : "fail") << "] " << h.name << "  ("
                      << h.computed << ")\n";
          }
        }
        r.kv("certified", *c.value, "certified gon(G x H)");
        r.kv("sn_equal", c.applied->sn_equal ? "yes" : "no", "sn equal");
      } else {
        r.kv("statement", "none");
        print_bounds(r, "gon_", c.bounds);
      }
    } else if (ralpha->parsed()) {
      const auto g = in.graph(graph_path);
      const auto res = cf::reduce_alpha(
          g, via == "sandwich" ? cf::AlphaSolver::kSandwich : cf::AlphaSolver::kGonality,
          threads);
      if (!cone_out.empty()) {
        std::ofstream f(cone_out);
        if (!f) throw cf::ValidationError("cannot write " + cone_out);
        cf::io::write_mel(f, res.cone_graph);
      }
      if (machine) {
        r.kv("alpha", res.alpha);
        r.kv("m", res.m);
        r.kv("cone_value", res.cone_value);
        r.kv("cone_vertices", res.cone_graph.vertex_count());
        r.kv("cone_edges", res.cone_graph.edge_count());
      } else {
        std::cout << "# alpha " << res.alpha << "\n# m " << res.m << "\n# gon(cone) "
                  << res.cone_value << '\n';
        cf::io::write_mel(std::cout, res.cone_graph);
      }
    } else if (fix->parsed()) {
      namespace fx = cf::fixtures;
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        auto write = [&](const std::string& name, auto&& fn) {
          std::ofstream f(std::filesystem::path(out_dir) / name);
          if (!f) throw cf::ValidationError("cannot write into " + out_dir);
          fn(f);
        };
        for (const auto& ng : fx::all_graphs())
          write(ng.name + ".mel", [&](std::ostream& o) { cf::io::write_mel(o, ng.graph); });
        write("cube_scramble.txt", [](std::ostream& o) { cf::io::write_scramble(o, fx::cube_scramble()); });
        write("diamond_wedge_high_scramble.txt", [](std::ostream& o) {
          cf::io::write_scramble(o, fx::diamond_wedge_high_scramble());
        });
        write("lift_pair_g_scramble.txt", [](std::ostream& o) {
          cf::io::write_scramble(o, fx::lift_pair_g_scramble());
        });
        write("cube_divisor.txt", [](std::ostream& o) { cf::io::write_divisor(o, fx::cube_divisor()); });
        write("lift_pair_divisor.txt", [](std::ostream& o) {
          cf::io::write_divisor(o, fx::lift_pair_divisor());
        });
        r.kv("written", out_dir);
      }
      if (check) {
        const auto checks = fx::run_checks(threads);
        std::size_t failed = 0;
        for (std::size_t i = 0; i < checks.size(); ++i) {
          const auto& c = checks[i];
          failed += !c.pass;
          if (machine)
            r.kv("check" + std::to_string(i), std::string(c.pass ? "pass" : "fail") + " " + c.name);
          else
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": expected " << c.expected
                      << ", got " << c.actual << '\n';
        }
        r.kv("failed", failed);
        if (failed) return 1;
      }
      if (out_dir.empty() && !check)
        for (const auto& ng : fx::all_graphs()) std::cout << ng.name << '\n';
    }
  } catch (const cf::SoundnessError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  } catch (const cf::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
