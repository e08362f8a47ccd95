#include "nextsp/layered_solver.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <thread>

namespace nsp {

namespace {

struct EdgePair {
  Edge x;
  Edge y;
  int layer;  // layer of X' and Y'
};

struct Best {
  Weight weight = std::numeric_limits<Weight>::max();
  std::uint64_t key = std::numeric_limits<std::uint64_t>::max();
  PathSeq path;
  LayeredStats stats;

  bool found() const { return !path.empty(); }
};

Weight path_weight(const WeightedDigraph& g, const PathSeq& p) {
  Weight total = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) total += *g.weight(p[i], p[i + 1]);
  return total;
}

// Same-layer forward-edge pairs in lexicographic edge order, minus pairs that
// share a tail or a head (they can never be vertex-disjoint).
std::vector<EdgePair> same_layer_pairs(const LayeredView& view) {
  std::vector<Edge> all;
  const auto& layers = view.layers();
  for (int l = 1; l <= layers.layer_count(); ++l) {
    const auto& fe = layers.forward_edges(l);
    all.insert(all.end(), fe.begin(), fe.end());
  }
  std::sort(all.begin(), all.end());
  std::vector<EdgePair> out;
  for (const auto& x : all) {
    for (const auto& y : all) {
      if (layers(x.tail) != layers(y.tail) || x.tail == y.tail || x.head == y.head) continue;
      out.push_back({x, y, layers(x.tail)});
    }
  }
  return out;
}

}  // namespace

std::optional<BackEdgeDecomposition> decompose(const WeightedDigraph& g, const DistanceTable& d,
                                               const PathSeq& path) {
  const auto check = validate_path(g, d, path);
  if (!check.simple || path.front() != g.source() || path.back() != g.sink()) {
    throw ContractViolation("decompose needs a simple s->t path");
  }
  std::optional<std::size_t> first, last;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Edge e{path[i], path[i + 1], *g.weight(path[i], path[i + 1])};
    if (edge_kind(d, e) == EdgeKind::Back) {
      if (!first) first = i;
      last = i;
    }
  }
  if (!first) return std::nullopt;
  const auto at = [&](std::size_t i) { return path.begin() + static_cast<std::ptrdiff_t>(i); };
  BackEdgeDecomposition out;
  out.a = path[*first];
  out.b = path[*last + 1];
  out.prefix.assign(path.begin(), at(*first + 1));
  out.middle.assign(at(*first), at(*last + 2));
  out.suffix.assign(at(*last + 1), path.end());
  return out;
}

std::optional<PathSeq> residual_middle_path(const WeightedDigraph& g, std::span<const Vertex> blocked,
                                            Vertex a, Vertex b) {
  std::vector<char> mask(static_cast<std::size_t>(g.id_bound()), 0);
  for (Vertex v : blocked) mask[static_cast<std::size_t>(v)] = 1;
  if (mask[static_cast<std::size_t>(a)] || mask[static_cast<std::size_t>(b)]) {
    throw ContractViolation("middle path endpoints must not be blocked");
  }
  return shortest_path(g, a, b, mask);
}

SolveOutcome next_sp_layered(const WeightedDigraph& g, const LayeredOptions& options, LayeredStats* stats) {
  return next_sp_layered(LayeredView(g), options, stats);
}

SolveOutcome next_sp_layered(const LayeredView& view, const LayeredOptions& options, LayeredStats* stats) {
  const auto& g = view.graph();
  const auto& d = view.distances();
  const auto& layer = view.layers();
  const Weight dt = view.d(g.sink());

  const auto classes = classify_edges(g, d);
  const auto& vb = classes.back_vertices;
  if (vb.empty()) return SolveOutcome::none();

  std::vector<std::pair<Vertex, Vertex>> ends;
  for (Vertex a : vb) {
    for (Vertex b : vb) {
      if (layer(a) > layer(b)) ends.emplace_back(a, b);
    }
  }
  // Unconstrained a->b distances bound every middle path from below.
  std::vector<std::vector<Distance>> reach(static_cast<std::size_t>(g.id_bound()));
  for (Vertex a : vb) {
    if (layer(a) > 1) reach[static_cast<std::size_t>(a)] = dijkstra(g, a);
  }
  const auto pairs = same_layer_pairs(view);
  const auto pair_count = static_cast<std::uint64_t>(pairs.size());

  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(ends.size())));
  std::vector<Best> results(workers);
  std::vector<std::exception_ptr> failures(workers);

  const auto search = [&](unsigned worker) {
    Best& best = results[worker];
    PdfpCache cache;
    std::vector<char> mask(static_cast<std::size_t>(g.id_bound()), 0);
    for (std::size_t i = worker; i < ends.size(); i += workers) {
      const auto [a, b] = ends[i];
      const Distance ab = reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (!ab) continue;
      const Weight bound = view.d(a) + *ab + dt - view.d(b);
      for (std::uint64_t j = 0; j < pair_count; ++j) {
        const auto& ep = pairs[j];
        if (ep.layer < layer(b) || ep.layer + 1 > layer(a)) continue;
        if (best.found() && bound >= best.weight) {
          ++best.stats.pruned;
          break;
        }
        ++best.stats.tuples;
        const auto pdfp = constrained_pdfp(view, {a, b, ep.x, ep.y}, &cache);
        if (!pdfp) continue;
        ++best.stats.feasible;

        for (Vertex v : pdfp->first) mask[static_cast<std::size_t>(v)] = 1;
        for (Vertex v : pdfp->second) mask[static_cast<std::size_t>(v)] = 1;
        mask[static_cast<std::size_t>(a)] = mask[static_cast<std::size_t>(b)] = 0;
        const auto middle = shortest_path(g, a, b, mask);
        std::fill(mask.begin(), mask.end(), 0);
        if (!middle) continue;

        const Weight weight = view.d(a) + path_weight(g, *middle) + dt - view.d(b);
        PathSeq full = pdfp->first;
        full.insert(full.end(), middle->begin() + 1, middle->end());
        full.insert(full.end(), pdfp->second.begin() + 1, pdfp->second.end());
        const auto check = validate_path(g, d, full);
        if (!check.simple || check.weight != weight || weight <= dt) {
          throw InternalError("layered solver produced an invalid candidate");
        }
        if (weight < best.weight) {
          best.weight = weight;
          best.key = static_cast<std::uint64_t>(i) * pair_count + j;
          best.path = std::move(full);
          ++best.stats.improvements;
        }
      }
    }
  };

  const auto run = [&](unsigned worker) {
    try {
      search(worker);
    } catch (...) {
      failures[worker] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  Best* winner = nullptr;
  LayeredStats total;
  for (auto& r : results) {
    total.tuples += r.stats.tuples;
    total.feasible += r.stats.feasible;
    total.pruned += r.stats.pruned;
    total.improvements += r.stats.improvements;
    if (r.found() && (!winner || std::tie(r.weight, r.key) < std::tie(winner->weight, winner->key))) winner = &r;
  }
  if (stats) *stats = total;
  if (!winner) return SolveOutcome::none();
  return SolveOutcome::of(std::move(winner->path), winner->weight);
}

}  // namespace nsp
