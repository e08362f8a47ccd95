#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nextsp/generators.hpp"
#include "nextsp/io.hpp"
#include "nextsp/oracle.hpp"
#include "nextsp/solver.hpp"

namespace nsp::cli {

namespace {

WeightedDigraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_graph(in);
}

void print_path(std::ostream& out, const PathSeq& p) {
  for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
  out << '\n';
}

void print_outcome(std::ostream& out, const SolveOutcome& o, int decimals) {
  if (!o.found()) {
    out << "NONE\n";
    return;
  }
  out << format_weight(o.weight(), decimals) << '\n';
  print_path(out, o.path());
}

// Maps library exceptions onto exit codes; everything else escapes.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const ContractViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const WeightedDigraph g = load_graph(args.graph);
    const SolveReport report = solve_detailed(g, {std::max(1u, args.threads)});
    if (args.dump_trace) {
      dump_trace(err, report.reduction.trace, g.decimals());
      err << "layered graph: " << report.reduction.graph.vertex_count() << " vertices, "
          << report.reduction.graph.edge_count() << " edges\n";
      err << "tuples: " << report.stats.tuples << ", feasible: " << report.stats.feasible
          << ", pruned: " << report.stats.pruned << '\n';
      if (report.winning_candidate) {
        err << "answer: reduction candidate " << *report.winning_candidate << '\n';
      } else if (report.outcome.found()) {
        err << "answer: layered solver\n";
      }
    }
    print_outcome(out, report.outcome, g.decimals());
    return kExitOk;
  });
}

int cmd_check(const std::string& graph, const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const WeightedDigraph g = load_graph(graph);
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    const PathSeq p = parse_path(in);
    const DistanceTable d = shortest_distances(g);

    for (Vertex v : p) {
      if (!g.contains(v)) {
        out << "INVALID: vertex " << v << " out of range\n";
        return kExitOk;
      }
    }
    PathCheck check;
    try {
      check = validate_path(g, d, p);
    } catch (const InvalidPath& e) {
      out << "INVALID: " << e.what() << '\n';
      return kExitOk;
    }
    const std::string w = format_weight(check.weight, g.decimals());
    if (p.empty() || p.front() != g.source() || p.back() != g.sink()) {
      out << "INVALID: not an s-t path\n";
    } else if (!check.simple) {
      out << "INVALID: repeated vertex\n";
    } else if (check.weight == *d.source_to_sink()) {
      out << "SHORTEST\n";
    } else {
      out << "NOT-SHORTEST, weight " << w << '\n';
    }
    out << "simple: " << yes_no(check.simple) << '\n';
    out << "weight: " << w << '\n';
    out << "back-edge: " << yes_no(check.uses_back_edge) << '\n';
    return kExitOk;
  });
}

int cmd_oracle(const std::string& graph, std::uint64_t budget, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const WeightedDigraph g = load_graph(graph);
    print_outcome(out, oracle_next_sp(g, budget), g.decimals());
    return kExitOk;
  });
}

int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (args.kind == "random") {
      write_graph(out, gen_random(args.n, args.p, args.w_max, args.seed));
    } else if (args.kind == "layered") {
      write_graph(out, gen_layered(args.layers, args.width, args.back_edges, args.seed, args.w_max));
    } else if (args.kind == "dag") {
      write_graph(out, gen_dag(args.n, args.p, args.seed));
    } else {
      throw std::invalid_argument("unknown generator '" + args.kind + "'");
    }
    return kExitOk;
  });
}

int cmd_vdp(const VdpArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    WeightedDigraph g = load_graph(args.graph);
    for (Vertex v : {args.s1, args.t1, args.s2, args.t2}) {
      if (!g.contains(v)) throw std::invalid_argument("terminal " + std::to_string(v) + " out of range");
    }
    if (args.forward_only) {
      // Edges leaving unreachable vertices have no forward/back kind.
      const DistanceTable d = shortest_distances(g);
      for (Vertex v : g.vertices()) {
        if (!d.from_s(v)) {
          for (const auto& [head, w] : std::map<Vertex, Weight>(g.out_edges(v))) g.remove_edge(v, head);
        }
      }
      g = forward_subgraph(g, d);
    }
    std::optional<DisjointPaths> res;
    try {
      res = two_disjoint_paths(g, {args.s1, args.t1}, {args.s2, args.t2});
    } catch (const ContractViolation& e) {
      throw std::invalid_argument(e.what());
    }
    if (!res) {
      out << "INFEASIBLE\n";
    } else {
      print_path(out, res->first);
      print_path(out, res->second);
    }
    return kExitOk;
  });
}

int cmd_stats(const std::string& graph, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const WeightedDigraph g = load_graph(graph);
    const DistanceTable d = shortest_distances(g);
    std::size_t back = 0;
    std::size_t unreachable_tails = 0;
    for (const Edge& e : g.edges()) {
      if (!d.from_s(e.tail)) {
        ++unreachable_tails;
      } else if (edge_kind(d, e) == EdgeKind::Back) {
        ++back;
      }
    }
    const bool straight = d.source_to_sink() && is_straight(g, d);
    out << "vertices: " << g.vertex_count() << '\n';
    out << "edges: " << g.edge_count() << '\n';
    out << "back-edges: " << back << '\n';
    if (unreachable_tails) out << "unclassified-edges: " << unreachable_tails << '\n';
    if (d.source_to_sink()) {
      out << "distance: " << format_weight(*d.source_to_sink(), g.decimals()) << '\n';
    } else {
      out << "distance: unreachable\n";
    }
    out << "straight: " << yes_no(straight) << '\n';
    out << "layered: " << yes_no(straight && is_layered(g, d)) << '\n';
    if (straight) {
      out << "phi: " << potential_phi(g, d) << '\n';
      out << "layers: " << distinct_distances(g, d).size() << '\n';
    }
    return kExitOk;
  });
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Next-to-shortest simple paths in positively weighted digraphs"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Find a next-to-shortest s-t path");
  solve->add_option("graph", solve_args.graph, "Edge-list graph file")->required();
  solve->add_option("--threads", solve_args.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  solve->add_flag("--dump-trace", solve_args.dump_trace, "Print the reduction trace to stderr");

  std::string check_graph, check_path;
  auto* check = app.add_subcommand("check", "Classify a vertex sequence");
  check->add_option("graph", check_graph, "Edge-list graph file")->required();
  check->add_option("path", check_path, "File with one line of vertex ids")->required();

  std::string oracle_graph;
  std::uint64_t budget = kDefaultBudget;
  auto* oracle = app.add_subcommand("oracle", "Brute-force next-to-shortest path");
  oracle->add_option("graph", oracle_graph, "Edge-list graph file")->required();
  oracle->add_option("--budget", budget, "Maximum DFS extensions");

  GenArgs gen_args;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Write a seeded random instance");
  gen->add_option("kind", gen_args.kind, "random, layered or dag")->check(CLI::IsMember({"random", "layered", "dag"}));
  gen->add_option("--n", gen_args.n, "Vertices (random, dag)");
  gen->add_option("--p", gen_args.p, "Edge probability (random, dag)");
  gen->add_option("--w-max", gen_args.w_max, "Maximum edge weight");
  gen->add_option("--layers", gen_args.layers, "Distance layers (layered)");
  gen->add_option("--width", gen_args.width, "Vertices per inner layer (layered)");
  gen->add_option("--back-edges", gen_args.back_edges, "Back-edges (layered)");
  gen->add_option("--seed", gen_args.seed, "RNG seed");
  gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

  VdpArgs vdp_args;
  auto* vdp = app.add_subcommand("vdp", "Two vertex-disjoint paths in a DAG");
  vdp->add_option("graph", vdp_args.graph, "Edge-list graph file")->required();
  vdp->add_option("s1", vdp_args.s1)->required();
  vdp->add_option("t1", vdp_args.t1)->required();
  vdp->add_option("s2", vdp_args.s2)->required();
  vdp->add_option("t2", vdp_args.t2)->required();
  vdp->add_flag("--forward", vdp_args.forward_only, "Use only forward edges of the graph");

  std::string stats_graph;
  auto* stats = app.add_subcommand("stats", "Structural summary of a graph");
  stats->add_option("graph", stats_graph, "Edge-list graph file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  if (solve->parsed()) return cmd_solve(solve_args, out, err);
  if (check->parsed()) return cmd_check(check_graph, check_path, out, err);
  if (oracle->parsed()) return cmd_oracle(oracle_graph, budget, out, err);
  if (vdp->parsed()) return cmd_vdp(vdp_args, out, err);
  if (stats->parsed()) return cmd_stats(stats_graph, out, err);
  if (gen_out.empty()) return cmd_gen(gen_args, out, err);
  std::ofstream file(gen_out);
  if (!file) {
    err << "error: cannot write " << gen_out << '\n';
    return kExitUsage;
  }
  return cmd_gen(gen_args, file, err);
}

}  // namespace nsp::cli
