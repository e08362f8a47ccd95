#include "nextsp/oracle.hpp"

#include <limits>

namespace nsp {

namespace {

class SimplePathWalker {
 public:
  SimplePathWalker(const WeightedDigraph& g, Vertex to, std::uint64_t budget,
                   const std::function<void(const PathSeq&, Weight)>& visit)
      : g_(g), to_(to), budget_(budget), visit_(visit), on_path_(static_cast<std::size_t>(g.id_bound()), 0) {}

  void run(Vertex from) {
    if (!g_.contains(from) || !g_.contains(to_)) return;
    path_.push_back(from);
    on_path_[static_cast<std::size_t>(from)] = 1;
    extend(from, 0);
  }

 private:
  void extend(Vertex v, Weight weight) {
    if (v == to_) {
      visit_(path_, weight);
      return;
    }
    for (const auto& [y, w] : g_.out_edges(v)) {
      if (on_path_[static_cast<std::size_t>(y)]) continue;
      if (spent_++ >= budget_) throw BudgetExceeded(budget_);
      path_.push_back(y);
      on_path_[static_cast<std::size_t>(y)] = 1;
      extend(y, weight + w);
      on_path_[static_cast<std::size_t>(y)] = 0;
      path_.pop_back();
    }
  }

  const WeightedDigraph& g_;
  Vertex to_;
  std::uint64_t budget_;
  std::uint64_t spent_ = 0;
  const std::function<void(const PathSeq&, Weight)>& visit_;
  std::vector<char> on_path_;
  PathSeq path_;
};

}  // namespace

void for_each_simple_path(const WeightedDigraph& g, Vertex from, Vertex to, std::uint64_t budget,
                          const std::function<void(const PathSeq&, Weight)>& visit) {
  SimplePathWalker(g, to, budget, visit).run(from);
}

SolveOutcome oracle_next_sp(const WeightedDigraph& g, std::uint64_t budget) {
  std::vector<std::pair<PathSeq, Weight>> paths;
  Weight lightest = std::numeric_limits<Weight>::max();
  for_each_simple_path(g, g.source(), g.sink(), budget, [&](const PathSeq& p, Weight w) {
    paths.emplace_back(p, w);
    lightest = std::min(lightest, w);
  });
  const std::pair<PathSeq, Weight>* best = nullptr;
  for (const auto& entry : paths) {
    if (entry.second > lightest && (!best || entry.second < best->second)) best = &entry;
  }
  if (!best) return SolveOutcome::none();
  return SolveOutcome::of(best->first, best->second);
}

std::optional<DisjointPaths> oracle_2vdp(const WeightedDigraph& dag, TerminalPair first, TerminalPair second,
                                         std::uint64_t budget) {
  std::vector<PathSeq> firsts, seconds;
  for_each_simple_path(dag, first.from, first.to, budget, [&](const PathSeq& p, Weight) { firsts.push_back(p); });
  for_each_simple_path(dag, second.from, second.to, budget, [&](const PathSeq& p, Weight) { seconds.push_back(p); });
  std::vector<char> used(static_cast<std::size_t>(dag.id_bound()), 0);
  for (const auto& p : firsts) {
    for (Vertex v : p) used[static_cast<std::size_t>(v)] = 1;
    for (const auto& q : seconds) {
      bool clash = false;
      for (Vertex v : q) clash = clash || used[static_cast<std::size_t>(v)];
      if (!clash) return DisjointPaths{p, q};
    }
    for (Vertex v : p) used[static_cast<std::size_t>(v)] = 0;
  }
  return std::nullopt;
}

}  // namespace nsp
