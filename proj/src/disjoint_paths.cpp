#include "nextsp/disjoint_paths.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>

namespace nsp {

namespace {

using StateKey = std::uint64_t;

StateKey pack(Vertex a, Vertex b) {
  return (static_cast<StateKey>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}
Vertex first_of(StateKey k) { return static_cast<Vertex>(k >> 32); }
Vertex second_of(StateKey k) { return static_cast<Vertex>(k & 0xffffffffu); }

void append_unique(PathSeq& p, Vertex v) {
  if (p.empty() || p.back() != v) p.push_back(v);
}

}  // namespace

DagDisjointPaths::DagDisjointPaths(const WeightedDigraph& dag)
    : dag_(dag), rank_(static_cast<std::size_t>(dag.id_bound()), -1) {
  std::vector<int> indegree(rank_.size(), 0);
  std::deque<Vertex> ready;
  for (Vertex v : dag_.vertices()) {
    indegree[static_cast<std::size_t>(v)] = static_cast<int>(dag_.in_edges(v).size());
    if (indegree[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
  }
  int next = 0;
  while (!ready.empty()) {
    const Vertex v = ready.front();
    ready.pop_front();
    rank_[static_cast<std::size_t>(v)] = next++;
    for (const auto& [y, w] : dag_.out_edges(v)) {
      if (--indegree[static_cast<std::size_t>(y)] == 0) ready.push_back(y);
    }
  }
  if (static_cast<std::size_t>(next) != dag_.vertex_count()) {
    throw ContractViolation("disjoint path search needs an acyclic graph");
  }
}

std::vector<char> DagDisjointPaths::reaching(Vertex target) const {
  std::vector<char> mark(rank_.size(), 0);
  std::vector<Vertex> stack{target};
  mark[static_cast<std::size_t>(target)] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const auto& [x, w] : dag_.in_edges(v)) {
      if (!mark[static_cast<std::size_t>(x)]) {
        mark[static_cast<std::size_t>(x)] = 1;
        stack.push_back(x);
      }
    }
  }
  return mark;
}

std::optional<DisjointPaths> DagDisjointPaths::find(TerminalPair first, TerminalPair second) const {
  for (Vertex v : {first.from, first.to, second.from, second.to}) {
    if (!dag_.contains(v)) throw ContractViolation("terminal " + std::to_string(v) + " is not in the graph");
  }
  if (first.from == second.from || first.from == second.to || first.to == second.from ||
      first.to == second.to) {
    throw ContractViolation("terminal pairs must not share a vertex");
  }
  const auto reach1 = reaching(first.to);
  const auto reach2 = reaching(second.to);
  if (!reach1[static_cast<std::size_t>(first.from)] || !reach2[static_cast<std::size_t>(second.from)]) {
    return std::nullopt;
  }

  const StateKey start = pack(first.from, second.from);
  const StateKey goal = pack(first.to, second.to);
  std::unordered_map<StateKey, StateKey> parent{{start, start}};
  std::vector<StateKey> stack{start};
  std::vector<StateKey> successors;
  bool found = start == goal;

  while (!stack.empty() && !found) {
    const StateKey cur = stack.back();
    stack.pop_back();
    const Vertex a = first_of(cur);
    const Vertex b = second_of(cur);
    const bool move_first =
        b == second.to || (a != first.to && rank(a) <= rank(b));
    const Vertex mover = move_first ? a : b;
    const auto& reach = move_first ? reach1 : reach2;

    successors.clear();
    for (const auto& [y, w] : dag_.out_edges(mover)) {
      if (!reach[static_cast<std::size_t>(y)] || y == (move_first ? b : a)) continue;
      successors.push_back(move_first ? pack(y, b) : pack(a, y));
    }
    // Reverse push so the smallest head id is explored first.
    for (auto it = successors.rbegin(); it != successors.rend(); ++it) {
      if (!parent.emplace(*it, cur).second) continue;
      if (*it == goal) {
        found = true;
        break;
      }
      stack.push_back(*it);
    }
  }
  if (!found) return std::nullopt;

  std::vector<StateKey> chain{goal};
  while (chain.back() != start) chain.push_back(parent.at(chain.back()));
  DisjointPaths out;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    append_unique(out.first, first_of(*it));
    append_unique(out.second, second_of(*it));
  }
  return out;
}

std::optional<DisjointPaths> two_disjoint_paths(const WeightedDigraph& dag, TerminalPair first,
                                                TerminalPair second) {
  return DagDisjointPaths(dag).find(first, second);
}

WeightedDigraph forward_subgraph(const WeightedDigraph& g, const DistanceTable& d) {
  WeightedDigraph out = g;
  for (const auto& e : g.edges()) {
    if (edge_kind(d, e) == EdgeKind::Back) out.remove_edge(e.tail, e.head);
  }
  return out;
}

LayeredView::LayeredView(const WeightedDigraph& g)
    : graph_(g),
      dist_(shortest_distances(g)),
      layers_(layer_function(graph_, dist_)),
      forward_(forward_subgraph(graph_, dist_)) {}

std::size_t PdfpCache::KeyHash::operator()(const Key& k) const noexcept {
  const auto [a, b, c] = k;
  std::uint64_t h = static_cast<std::uint32_t>(a);
  h = h * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint32_t>(b);
  h = h * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint32_t>(c);
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::optional<std::optional<DisjointPaths>> PdfpCache::get(bool prefix, const Key& key) const {
  const auto& map = prefix ? prefix_ : suffix_;
  if (auto it = map.find(key); it != map.end()) return it->second;
  return std::nullopt;
}

void PdfpCache::put(bool prefix, const Key& key, std::optional<DisjointPaths> value) {
  (prefix ? prefix_ : suffix_).insert_or_assign(key, std::move(value));
}

std::optional<DisjointPaths> constrained_pdfp(const LayeredView& view, const TupleCandidate& tuple,
                                              PdfpCache* cache) {
  const auto& g = view.graph();
  const auto& layer = view.layers();
  const auto [xt, xh, xw] = tuple.x_edge;
  const auto [yt, yh, yw] = tuple.y_edge;
  for (Vertex v : {tuple.a, tuple.b, xt, xh, yt, yh}) {
    if (!g.contains(v)) throw ContractViolation("tuple vertex " + std::to_string(v) + " is not in the graph");
  }
  if (!view.forward().dag().has_edge(xt, xh) || !view.forward().dag().has_edge(yt, yh)) {
    throw ContractViolation("waypoint edges must be forward edges");
  }
  if (layer(xt) != layer(yt)) throw ContractViolation("waypoint edges must leave the same layer");
  if (layer(tuple.b) >= layer(tuple.a) || layer(tuple.b) > layer(yt) || layer(xh) > layer(tuple.a)) {
    throw ContractViolation("tuple layers out of order");
  }

  const Vertex s = g.source();
  const Vertex t = g.sink();
  const auto disjoint = [](Vertex p, Vertex q, Vertex r, Vertex u) { return p != r && p != u && q != r && q != u; };
  if (!disjoint(s, xt, tuple.b, yt) || !disjoint(xh, tuple.a, yh, t)) return std::nullopt;

  const auto solve_half = [&](bool prefix, PdfpCache::Key key, TerminalPair p, TerminalPair q) {
    if (cache) {
      if (auto hit = cache->get(prefix, key)) return *hit;
    }
    auto result = view.forward().find(p, q);
    if (cache) cache->put(prefix, key, result);
    return result;
  };

  auto low = solve_half(true, {tuple.b, xt, yt}, {s, xt}, {tuple.b, yt});
  if (!low) return std::nullopt;
  auto high = solve_half(false, {tuple.a, xh, yh}, {xh, tuple.a}, {yh, t});
  if (!high) return std::nullopt;

  DisjointPaths out{std::move(low->first), std::move(low->second)};
  out.first.insert(out.first.end(), high->first.begin(), high->first.end());
  out.second.insert(out.second.end(), high->second.begin(), high->second.end());
  return out;
}

}  // namespace nsp
