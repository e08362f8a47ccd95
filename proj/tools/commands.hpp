#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "nextsp/graph.hpp"

namespace nsp::cli {

// Stable exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitInternal = 3;
inline constexpr int kExitBudget = 4;

struct SolveArgs {
  std::string graph;
  unsigned threads = 1;
  bool dump_trace = false;
};

struct GenArgs {
  std::string kind = "random";  // random | layered
  Vertex n = 8;
  double p = 0.4;
  Weight w_max = 5;
  int layers = 4;
  int width = 2;
  int back_edges = 2;
  std::uint64_t seed = 1;
};

struct VdpArgs {
  std::string graph;
  Vertex s1 = 0, t1 = 0, s2 = 0, t2 = 0;
  bool forward_only = false;
};

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);
int cmd_check(const std::string& graph, const std::string& path, std::ostream& out, std::ostream& err);
int cmd_oracle(const std::string& graph, std::uint64_t budget, std::ostream& out, std::ostream& err);
int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err);
int cmd_vdp(const VdpArgs& args, std::ostream& out, std::ostream& err);
int cmd_stats(const std::string& graph, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace nsp::cli
